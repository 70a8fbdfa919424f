#ifndef BELLINV_UNIPOLY_HPP
#define BELLINV_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bellinv/errors.hpp"
#include "bellinv/rational.hpp"

namespace bellinv {

/// Dense univariate polynomial over a commutative coefficient ring S.
/// Coefficient i belongs to u^i; the trailing (degree) coefficient is nonzero
/// unless the polynomial is zero, in which case the list is empty.
///
/// Throughout the library the indeterminate is u = p*s, which turns every
/// evaluation point of interest (-q_k/p, -1/p+n, s-q_k/p) into a plain
/// rational shift in u.
template <class S>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(S constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit DensePoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static DensePoly one() { return DensePoly(S(1)); }
  /// coef * u^power
  static DensePoly monomial(S coef, unsigned power) {
    DensePoly p;
    if (!coef.is_zero()) {
      p.c_.assign(power + 1, S(0));
      p.c_[power] = std::move(coef);
    }
    return p;
  }
  /// The indeterminate u itself.
  static DensePoly u() { return monomial(S(1), 1); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }

  S coeff(size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  const std::vector<S>& coeffs() const { return c_; }

  S leading() const { return c_.empty() ? S(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == S(1); }

  DensePoly& operator+=(const DensePoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), S(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), S(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  DensePoly operator-() const {
    DensePoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    DensePoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, S(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  DensePoly operator*(const S& s) const {
    DensePoly r;
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  DensePoly operator/(const S& s) const {
    if (s.is_zero()) throw DomainError("polynomial division by zero scalar");
    DensePoly r;
    r.c_ = c_;
    for (auto& c : r.c_) c = c / s;
    return r;
  }

  /// Multiplication by u (degree shift).
  DensePoly shifted_up() const {
    if (is_zero()) return DensePoly();
    DensePoly r;
    r.c_.reserve(c_.size() + 1);
    r.c_.push_back(S(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  /// Horner evaluation at a point of the coefficient ring.
  S eval(const S& point) const {
    S acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<S> c_;
};

/// The workhorse instantiation: polynomials in u = p*s over Rational.
using UniPoly = DensePoly<Rational>;

inline std::string to_pretty(const UniPoly& p, const char* var = "u") {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = p.size(); i-- > 0;) {
    Rational c = p.coeff(i);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) { out += "-"; c = -c; }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (i == 0 || !c.is_one()) out += c.to_string();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace bellinv

#endif  // BELLINV_UNIPOLY_HPP
