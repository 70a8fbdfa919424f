#ifndef BELLINV_RATIONAL_HPP
#define BELLINV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "bellinv/errors.hpp"

namespace bellinv {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator. Zero is 0/1. The base scalar of the whole library;
/// no floating point appears anywhere downstream of this type.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}  // NOLINT: implicit by design, scalars mix freely
  Rational(const BigInt& v) : v_(v) {}
  Rational(long num, long den) { assign(BigInt(num), BigInt(den)); }
  Rational(const BigInt& num, const BigInt& den) { assign(num, den); }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw DomainError("zero cannot be raised to a negative power");
      return Rational(1) / pow(-e);
    }
    Rational acc(1), base(*this);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "n" when the denominator is 1, otherwise "n/d" (lowest terms, d > 0).
  std::string to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  /// Parses "n" or "n/d" (optional leading '-' or '+'); normalizes the result.
  static Rational from_string(std::string_view text) {
    auto bad = [&](const char* why) {
      return ParseError(std::string("invalid rational \"") + std::string(text) + "\": " + why);
    };
    if (text.empty()) throw bad("empty string");
    const auto strip_plus = [](std::string_view s) {
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      return std::string(s);
    };
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    if (!is_integer_literal(num_part)) throw bad("malformed numerator");
    BigInt num{strip_plus(num_part)};
    BigInt den(1);
    if (slash != std::string_view::npos) {
      const std::string_view den_part = text.substr(slash + 1);
      if (!is_integer_literal(den_part)) throw bad("malformed denominator");
      den = BigInt(strip_plus(den_part));
      if (den.is_zero()) throw bad("zero denominator");
    }
    return Rational(num, den);
  }

 private:
  using Impl = boost::multiprecision::cpp_rational;

  void assign(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    // cpp_rational divides out the gcd but insists on a positive denominator.
    if (den < 0)
      v_ = Impl(-num, -den);
    else
      v_ = Impl(num, den);
  }

  static bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  }

  Impl v_;
};

/// n! as a big integer, memoized per thread.
inline BigInt factorial(unsigned n) {
  thread_local std::vector<BigInt> cache{BigInt(1)};
  while (cache.size() <= n) cache.push_back(cache.back() * BigInt(cache.size()));
  return cache[n];
}

/// Falling factorial (t)_n = t(t-1)...(t-n+1); the empty product is 1.
inline Rational falling_factorial(const Rational& t, unsigned n) {
  Rational acc(1);
  for (unsigned j = 0; j < n; ++j) acc *= t - Rational(static_cast<long>(j));
  return acc;
}

/// Generalized binomial coefficient binom(t, k) = (t)_k / k! for any rational t.
inline Rational rat_binomial(const Rational& t, unsigned k) {
  return falling_factorial(t, k) / Rational(factorial(k));
}

}  // namespace bellinv

#endif  // BELLINV_RATIONAL_HPP
