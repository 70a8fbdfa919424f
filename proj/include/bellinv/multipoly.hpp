#ifndef BELLINV_MULTIPOLY_HPP
#define BELLINV_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellinv/errors.hpp"
#include "bellinv/rational.hpp"

namespace bellinv {

/// Product of variable powers. Factors are (variable index >= 1, exponent >= 1)
/// pairs sorted by variable index; the empty factor list is the constant 1.
struct Monomial {
  std::vector<std::pair<unsigned, unsigned>> factors;

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
  }

  unsigned exponent_of(unsigned var) const {
    for (const auto& [v, e] : factors)
      if (v == var) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
      if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
        r.factors.push_back(a.factors[i++]);
      } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
        r.factors.push_back(b.factors[j++]);
      } else {
        r.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
        ++i, ++j;
      }
    }
    return r;
  }

  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order, leading term first: higher total degree
/// precedes; ties broken so that the monomial with the larger exponent on the
/// earliest variable comes first. Deterministic iteration order backs the
/// canonical serialization.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
      if (a.factors[i].first != b.factors[j].first)
        return a.factors[i].first < b.factors[j].first;
      if (a.factors[i].second != b.factors[j].second)
        return a.factors[i].second > b.factors[j].second;
      ++i, ++j;
    }
    return i < a.factors.size();
  }
};

/// Sparse multivariate polynomial over Rational. No zero coefficients are
/// stored; the term map iterates in canonical (graded lex) order.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  MultiPoly() = default;
  explicit MultiPoly(long c) { if (c != 0) terms_[Monomial{}] = Rational(c); }
  explicit MultiPoly(const Rational& c) { if (!c.is_zero()) terms_[Monomial{}] = c; }

  static MultiPoly variable(unsigned index, unsigned exponent = 1) {
    if (index == 0) throw DomainError("variable indices are 1-based");
    MultiPoly p;
    if (exponent > 0)
      p.terms_[Monomial{{{index, exponent}}}] = Rational(1);
    else
      p.terms_[Monomial{}] = Rational(1);
    return p;
  }

  /// Single term coef * prod var^exp. Factors need not be sorted; zero
  /// exponents are dropped.
  static MultiPoly term(const Rational& coef, std::vector<std::pair<unsigned, unsigned>> factors) {
    MultiPoly p;
    if (coef.is_zero()) return p;
    std::erase_if(factors, [](const auto& f) { return f.second == 0; });
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors)
      if (v == 0) throw DomainError("variable indices are 1-based");
    p.terms_[Monomial{std::move(factors)}] = coef;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
  }

  Rational constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.begin()->second;
  }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
  }

  unsigned max_var_index() const {
    unsigned m = 0;
    for (const auto& [mono, c] : terms_)
      for (const auto& [v, e] : mono.factors) m = std::max(m, v);
    return m;
  }

  std::set<unsigned> variables() const {
    std::set<unsigned> vars;
    for (const auto& [mono, c] : terms_)
      for (const auto& [v, e] : mono.factors) vars.insert(v);
    return vars;
  }

  /// Coefficient of the leading (first canonical) term; 0 for the zero polynomial.
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  MultiPoly operator*(const Rational& s) const {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
    return r;
  }
  MultiPoly operator/(const Rational& s) const {
    if (s.is_zero()) throw DomainError("polynomial division by zero scalar");
    return *this * (Rational(1) / s);
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Evaluates at a (1-based) variable assignment. Every variable occurring in
  /// the polynomial must be present.
  Rational eval(const std::map<unsigned, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& [mono, coef] : terms_) {
      Rational term = coef;
      for (const auto& [v, e] : mono.factors) {
        auto it = assignment.find(v);
        if (it == assignment.end())
          throw DomainError("missing variable x" + std::to_string(v) + " in assignment");
        term *= it->second.pow(e);
      }
      acc += term;
    }
    return acc;
  }

  /// Dense convenience overload: values[i] assigns variable i+1.
  Rational eval(std::span<const Rational> values) const {
    std::map<unsigned, Rational> assignment;
    for (size_t i = 0; i < values.size(); ++i) assignment[static_cast<unsigned>(i + 1)] = values[i];
    return eval(assignment);
  }

  /// Largest e such that var^e divides every term (0 for the zero polynomial).
  unsigned min_exponent_of(unsigned var) const {
    if (terms_.empty()) return 0;
    unsigned m = ~0u;
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.exponent_of(var));
    return m;
  }

  /// Exact division by var^e; throws if some term lacks the factor.
  MultiPoly divide_by_var(unsigned var, unsigned e) const {
    if (e == 0) return *this;
    MultiPoly r;
    for (const auto& [mono, c] : terms_) {
      Monomial m = mono;
      bool found = false;
      for (auto& [v, exp] : m.factors) {
        if (v == var) {
          if (exp < e) throw DomainError("inexact division by variable power");
          exp -= e;
          found = true;
          break;
        }
      }
      if (!found) throw DomainError("inexact division by variable power");
      std::erase_if(m.factors, [](const auto& f) { return f.second == 0; });
      r.terms_[m] = c;
    }
    return r;
  }

  /// Human-readable form like "2x1x3 + x2^2" (variable letter configurable).
  std::string to_pretty(char letter = 'x') const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
      Rational c = coef;
      if (first) {
        if (c.sign() < 0) { out += "-"; c = -c; }
      } else {
        out += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0) c = -c;
      }
      first = false;
      const bool unit = c.is_one() && !mono.factors.empty();
      if (!unit) out += c.to_string();
      for (const auto& [v, e] : mono.factors) {
        out += letter + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

}  // namespace bellinv

#endif  // BELLINV_MULTIPOLY_HPP
