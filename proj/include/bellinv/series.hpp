#ifndef BELLINV_SERIES_HPP
#define BELLINV_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "bellinv/errors.hpp"
#include "bellinv/rational.hpp"

namespace bellinv {

/// Truncated formal power series over a commutative coefficient ring R.
/// A series of order N carries exactly the coefficients of t^0..t^N; no
/// operation ever reads or fabricates coefficients beyond the order.
/// Operations on mismatched orders are rejected rather than silently
/// re-truncated; use truncated() to drop precision explicitly.
///
/// R must provide ring arithmetic plus mixed scalar arithmetic with Rational
/// (x * Rational, x / Rational). Rational itself, UniPoly and MultiPoly all
/// qualify.
template <class R>
class Series {
 public:
  explicit Series(int order) : order_(check_order(order)), c_(order + 1, R(0)) {}
  Series(int order, std::vector<R> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
    if (c_.size() > static_cast<size_t>(order_) + 1)
      throw DomainError("more coefficients than the truncation order admits");
    c_.resize(order_ + 1, R(0));
  }

  static Series constant(int order, R value) {
    Series s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  /// The identity series t.
  static Series identity(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  int order() const { return order_; }
  const R& operator[](size_t n) const { return c_[n]; }
  void set_coeff(size_t n, R v) { c_[n] = std::move(v); }
  const std::vector<R>& coeffs() const { return c_; }

  bool in_L0() const { return !c_[0].is_zero(); }
  bool in_L1() const { return c_[0].is_zero() && order_ >= 1 && !c_[1].is_zero(); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  Series truncated(int new_order) const {
    if (new_order > order_) throw OrderMismatch("cannot truncate upward");
    Series s(new_order);
    for (int i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
  }

  /// Multiplication by t; the result honestly carries one more known coefficient.
  Series shifted_up() const {
    Series s(order_ + 1);
    for (int i = 0; i <= order_; ++i) s.c_[i + 1] = c_[i];
    return s;
  }

  /// Division by t; requires a zero constant term.
  Series shifted_down() const {
    if (!c_[0].is_zero()) throw DomainError("division by t requires a zero constant term");
    if (order_ == 0) throw DomainError("cannot shift down an order-0 series");
    Series s(order_ - 1);
    for (int i = 1; i <= order_; ++i) s.c_[i - 1] = c_[i];
    return s;
  }

  Series& operator+=(const Series& o) {
    same_order(o);
    for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    same_order(o);
    for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series s(*this);
    for (auto& c : s.c_) c = -c;
    return s;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.same_order(b);
    Series r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  Series operator*(const Rational& s) const {
    Series r(*this);
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  Series pow_int(unsigned k) const {
    Series r = constant(order_, R(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return order;
  }
  void same_order(const Series& o) const {
    if (order_ != o.order_)
      throw OrderMismatch("series order mismatch: " + std::to_string(order_) + " vs " +
                          std::to_string(o.order_));
  }

  int order_;
  std::vector<R> c_;
};

template <class A, class F>
auto map_series(const Series<A>& s, F&& fn) -> Series<decltype(fn(s[0]))> {
  using B = decltype(fn(s[0]));
  Series<B> r(s.order());
  for (int i = 0; i <= s.order(); ++i) r.set_coeff(i, fn(s[i]));
  return r;
}

/// 1/phi for phi with an invertible constant term.
template <class R>
Series<R> series_recip(const Series<R>& phi) {
  if (!phi.in_L0()) throw DomainError("reciprocal requires a nonzero constant term");
  const int N = phi.order();
  Series<R> h(N);
  const R inv0 = R(1) / phi[0];
  h.set_coeff(0, inv0);
  for (int n = 1; n <= N; ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) acc += phi[k] * h[n - k];
    h.set_coeff(n, -(acc * inv0));
  }
  return h;
}

/// log(phi) for phi with constant term exactly 1.
template <class R>
Series<R> series_log(const Series<R>& phi) {
  if (!(phi[0] == R(1))) throw DomainError("series_log requires constant term 1");
  const int N = phi.order();
  Series<R> L(N);
  for (int n = 1; n <= N; ++n) {
    R acc = phi[n] * Rational(static_cast<long>(n));
    for (int k = 1; k < n; ++k) acc -= (L[k] * phi[n - k]) * Rational(static_cast<long>(k));
    L.set_coeff(n, acc / Rational(static_cast<long>(n)));
  }
  return L;
}

/// exp(h) for h with zero constant term.
template <class R>
Series<R> series_exp(const Series<R>& h) {
  if (!h[0].is_zero()) throw DomainError("series_exp requires a zero constant term");
  const int N = h.order();
  Series<R> E(N);
  E.set_coeff(0, R(1));
  for (int n = 1; n <= N; ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) acc += (h[k] * E[n - k]) * Rational(static_cast<long>(k));
    E.set_coeff(n, acc / Rational(static_cast<long>(n)));
  }
  return E;
}

/// phi^alpha for rational alpha and phi with constant term 1, via the
/// power-rule recurrence n*h_n = sum_k ((alpha+1)k - n) phi_k h_{n-k}.
template <class R>
Series<R> series_pow_rat(const Series<R>& phi, const Rational& alpha) {
  if (!(phi[0] == R(1))) throw DomainError("series_pow_rat requires constant term 1");
  const int N = phi.order();
  Series<R> h(N);
  h.set_coeff(0, R(1));
  for (int n = 1; n <= N; ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) {
      const Rational w = (alpha + 1) * Rational(static_cast<long>(k)) - Rational(static_cast<long>(n));
      if (w.is_zero()) continue;
      acc += (phi[k] * h[n - k]) * w;
    }
    h.set_coeff(n, acc / Rational(static_cast<long>(n)));
  }
  return h;
}

/// outer(inner) for inner with zero constant term (so the truncation closes).
template <class R>
Series<R> series_compose(const Series<R>& outer, const Series<R>& inner) {
  if (outer.order() != inner.order())
    throw OrderMismatch("series_compose requires equal orders");
  if (!inner[0].is_zero())
    throw DomainError("series_compose requires the inner series to vanish at 0");
  const int N = outer.order();
  Series<R> r = Series<R>::constant(N, outer[N]);
  for (int i = N - 1; i >= 0; --i) {
    r = r * inner;
    r.set_coeff(0, r[0] + outer[i]);
  }
  return r;
}

/// Coefficients a_0..a_N with G(t) = sum a_n (t/phi(t))^n up to order N,
/// computed as a_n = (1/n) [t^{n-1}] G'(t) phi^n(t). Requires phi with a
/// nonzero constant term.
template <class R>
std::vector<R> lagrange_coeffs(const Series<R>& G, const Series<R>& phi, int N) {
  if (G.order() != N || phi.order() != N)
    throw OrderMismatch("lagrange_coeffs expects both series at the requested order");
  if (!phi.in_L0()) throw DomainError("lagrange_coeffs requires phi with nonzero constant term");

  std::vector<R> result(N + 1, R(0));
  result[0] = G[0];
  if (N == 0) return result;

  std::vector<R> dG(N, R(0));  // dG[j] = (j+1) G_{j+1}
  for (int j = 0; j < N; ++j) dG[j] = G[j + 1] * Rational(static_cast<long>(j + 1));

  // pw holds phi^n truncated to t^{N-1}.
  std::vector<R> pw(N, R(0));
  for (int j = 0; j < N; ++j) pw[j] = phi[j];
  for (int n = 1; n <= N; ++n) {
    R acc(0);
    for (int j = 0; j <= n - 1; ++j) acc += dG[j] * pw[n - 1 - j];
    result[n] = acc / Rational(static_cast<long>(n));
    if (n < N) {
      std::vector<R> next(N, R(0));
      for (int i = 0; i < N; ++i) {
        if (pw[i].is_zero()) continue;
        for (int j = 0; i + j < N; ++j) next[i + j] += pw[i] * phi[j];
      }
      pw = std::move(next);
    }
  }
  return result;
}

/// Compositional inverse of f in L1: g with f(g(t)) = g(f(t)) = t up to order
/// N. Computed by Lagrange inversion (g_n = (1/n)[t^{n-1}] (t/f)^n) and then
/// verified by composition.
template <class R>
Series<R> series_comp_inverse(const Series<R>& f) {
  if (!f.in_L1()) throw DomainError("no composite inverse: series is not in L1");
  const int N = f.order();
  const Series<R> t_over_f = series_recip(f.shifted_down());  // order N-1
  Series<R> g(N);
  // pw holds (t/f)^n truncated to t^{N-1}.
  std::vector<R> pw(N, R(0));
  for (int j = 0; j < N; ++j) pw[j] = t_over_f[j];
  for (int n = 1; n <= N; ++n) {
    g.set_coeff(n, pw[n - 1] / Rational(static_cast<long>(n)));
    if (n < N) {
      std::vector<R> next(N, R(0));
      for (int i = 0; i < N; ++i) {
        if (pw[i].is_zero()) continue;
        for (int j = 0; i + j < N; ++j) next[i + j] += pw[i] * t_over_f[j];
      }
      pw = std::move(next);
    }
  }
  if (!(series_compose(f, g) == Series<R>::identity(N)))
    throw Error("composite inverse failed its composition check");
  return g;
}

/// Expansion of S in powers of F (F in L1 with invertible linear term):
/// returns mu_0..mu_N with S = sum mu_n F^n up to order N. Triangular solve
/// against the coefficients of F^k, whose pivot is F_1^n.
template <class R>
std::vector<R> basis_expand(const Series<R>& S, const Series<Rational>& F) {
  if (S.order() != F.order()) throw OrderMismatch("basis_expand requires equal orders");
  if (!F.in_L1()) throw DomainError("basis_expand requires F in L1");
  const int N = S.order();

  // powers[k][n] = [t^n] F^{k+1}, truncated at N.
  std::vector<std::vector<Rational>> powers;
  powers.push_back(F.coeffs());
  for (int k = 2; k <= N; ++k) {
    const auto& prev = powers.back();
    std::vector<Rational> next(N + 1, Rational(0));
    for (int i = 0; i <= N; ++i) {
      if (prev[i].is_zero()) continue;
      for (int j = 1; i + j <= N; ++j) next[i + j] += prev[i] * F[j];
    }
    powers.push_back(std::move(next));
  }

  std::vector<R> mu(N + 1, R(0));
  mu[0] = S[0];
  for (int n = 1; n <= N; ++n) {
    R acc = S[n];
    for (int k = 1; k < n; ++k) {
      const Rational& b = powers[k - 1][n];
      if (!b.is_zero()) acc -= mu[k] * b;
    }
    mu[n] = acc / powers[n - 1][n];  // pivot F_1^n != 0
  }
  return mu;
}

}  // namespace bellinv

#endif  // BELLINV_SERIES_HPP
