#ifndef BELLINV_FRACPOLY_HPP
#define BELLINV_FRACPOLY_HPP

#include <utility>

#include "bellinv/multipoly.hpp"

namespace bellinv {

/// Quotient of two MultiPolys. No gcd reduction is attempted (content removal
/// only); equality is decided by cross-multiplication, which is exact and
/// cheap at the sizes the symbolic checks use.
class FracPoly {
 public:
  FracPoly() : num_(), den_(1) {}
  FracPoly(long c) : num_(c), den_(1) {}  // NOLINT: implicit, scalars mix freely
  FracPoly(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  explicit FracPoly(MultiPoly p) : num_(std::move(p)), den_(1) {}
  FracPoly(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("fraction with zero denominator");
    normalize();
  }

  static FracPoly variable(unsigned index) { return FracPoly(MultiPoly::variable(index)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FracPoly& operator+=(const FracPoly& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  FracPoly& operator-=(const FracPoly& o) { return *this += -o; }
  FracPoly& operator*=(const FracPoly& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  FracPoly& operator/=(const FracPoly& o) {
    if (o.is_zero()) throw DomainError("fraction division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
  }

  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator*(FracPoly a, const FracPoly& b) { return a *= b; }
  friend FracPoly operator/(FracPoly a, const FracPoly& b) { return a /= b; }
  FracPoly operator-() const {
    FracPoly r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const FracPoly& a, const FracPoly& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    // Content removal: make the denominator's leading coefficient 1.
    const Rational lead = den_.leading_coefficient();
    if (!lead.is_one()) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  MultiPoly num_, den_;
};

}  // namespace bellinv

#endif  // BELLINV_FRACPOLY_HPP
