#ifndef BELLINV_TRANSFORMS_HPP
#define BELLINV_TRANSFORMS_HPP

#include <span>
#include <string>
#include <vector>

#include "bellinv/bell.hpp"
#include "bellinv/errors.hpp"
#include "bellinv/lambda.hpp"
#include "bellinv/mina.hpp"
#include "bellinv/problem_spec.hpp"
#include "bellinv/rational.hpp"
#include "bellinv/report.hpp"
#include "bellinv/series.hpp"

namespace bellinv {

/// x_1..x_N, index 0 holding x_1. All transforms map a prefix to a prefix of
/// the same length.
using SequencePrefix = std::vector<Rational>;

namespace detail {

inline std::vector<std::vector<Rational>> bell_of(const SequencePrefix& s) {
  return bell_table<Rational>(static_cast<unsigned>(s.size()), s);
}

}  // namespace detail

// --- Pair one: z_m = sum_k (am+bk)/(k(am+b)) binom(-am-b, k-1) B_{m,k}(x) and
//     x_m = sum_k (1/k) binom(am+bk, k-1) B_{m,k}(z). ---------------------

inline void thm13_scan_poles(const Rational& a, const Rational& b, size_t N) {
  if (a.is_zero() && b.is_zero())
    throw DomainError("transform requires a and b not both zero");
  for (size_t m = 1; m <= N; ++m) {
    if ((a * Rational(static_cast<long>(m)) + b).is_zero())
      throw SingularParameter("singular parameter: a*m + b = 0 at m = " + std::to_string(m),
                              static_cast<long>(m));
  }
}

inline SequencePrefix thm13_forward(const Rational& a, const Rational& b,
                                    const SequencePrefix& x) {
  thm13_scan_poles(a, b, x.size());
  const auto B = detail::bell_of(x);
  SequencePrefix z(x.size());
  for (size_t m = 1; m <= x.size(); ++m) {
    const Rational am = a * Rational(static_cast<long>(m));
    Rational acc(0);
    for (size_t k = 1; k <= m; ++k) {
      const Rational bk = b * Rational(static_cast<long>(k));
      const Rational coef = (am + bk) / (Rational(static_cast<long>(k)) * (am + b)) *
                            rat_binomial(-am - b, static_cast<unsigned>(k - 1));
      acc += coef * B[m - 1][k - 1];
    }
    z[m - 1] = acc;
  }
  return z;
}

inline SequencePrefix thm13_backward(const Rational& a, const Rational& b,
                                     const SequencePrefix& z) {
  thm13_scan_poles(a, b, z.size());
  const auto B = detail::bell_of(z);
  SequencePrefix x(z.size());
  for (size_t m = 1; m <= z.size(); ++m) {
    const Rational am = a * Rational(static_cast<long>(m));
    Rational acc(0);
    for (size_t k = 1; k <= m; ++k) {
      const Rational coef = rat_binomial(am + b * Rational(static_cast<long>(k)),
                                         static_cast<unsigned>(k - 1)) /
                            Rational(static_cast<long>(k));
      acc += coef * B[m - 1][k - 1];
    }
    x[m - 1] = acc;
  }
  return x;
}

// --- Pair two: y_m = (1/(am+b)) sum_k binom(-am-b, k) B_{m,k}(x) and
//     x_m = (1/(am+1)) sum_k binom(-(am+1)/b, k) b^k B_{m,k}(y). -----------

inline void thm14_scan_poles(const Rational& a, const Rational& b, size_t N) {
  if (b.is_zero()) throw DomainError("transform requires b != 0");
  for (size_t m = 1; m <= N; ++m) {
    const Rational am = a * Rational(static_cast<long>(m));
    if ((am + b).is_zero())
      throw SingularParameter("singular parameter: a*m + b = 0 at m = " + std::to_string(m),
                              static_cast<long>(m));
    if ((am + 1).is_zero())
      throw SingularParameter("singular parameter: a*m + 1 = 0 at m = " + std::to_string(m),
                              static_cast<long>(m));
  }
}

inline SequencePrefix thm14_forward(const Rational& a, const Rational& b,
                                    const SequencePrefix& x) {
  thm14_scan_poles(a, b, x.size());
  const auto B = detail::bell_of(x);
  SequencePrefix y(x.size());
  for (size_t m = 1; m <= x.size(); ++m) {
    const Rational am = a * Rational(static_cast<long>(m));
    Rational acc(0);
    for (size_t k = 1; k <= m; ++k)
      acc += rat_binomial(-am - b, static_cast<unsigned>(k)) * B[m - 1][k - 1];
    y[m - 1] = acc / (am + b);
  }
  return y;
}

inline SequencePrefix thm14_backward(const Rational& a, const Rational& b,
                                     const SequencePrefix& y) {
  thm14_scan_poles(a, b, y.size());
  const auto B = detail::bell_of(y);
  SequencePrefix x(y.size());
  for (size_t m = 1; m <= y.size(); ++m) {
    const Rational am = a * Rational(static_cast<long>(m));
    Rational acc(0);
    Rational bpow(1);
    for (size_t k = 1; k <= m; ++k) {
      bpow *= b;
      acc += rat_binomial(-(am + 1) / b, static_cast<unsigned>(k)) * bpow * B[m - 1][k - 1];
    }
    x[m - 1] = acc / (am + 1);
  }
  return x;
}

// --- Pair three (c = r - q):
//     x_n = (1/c) sum_k (q/(q+np) binom(q+np, k) - r/(r+np) binom(r+np, k)) B_{n,k}(y)
//     y_n = -sum_k (1/k!) prod_{j=1}^{k-1} (np + kq + cj - 1) B_{n,k}(x). ---

inline void thm15_scan_poles(const Rational& p, const Rational& q, const Rational& r, size_t N) {
  if (q == r) throw DomainError("transform requires q != r");
  if (p.is_zero() || q.is_zero() || r.is_zero()) throw DomainError("transform requires pqr != 0");
  for (size_t n = 1; n <= N; ++n) {
    const Rational np = p * Rational(static_cast<long>(n));
    if ((q + np).is_zero())
      throw SingularParameter("singular parameter: q + n*p = 0 at n = " + std::to_string(n),
                              static_cast<long>(n));
    if ((r + np).is_zero())
      throw SingularParameter("singular parameter: r + n*p = 0 at n = " + std::to_string(n),
                              static_cast<long>(n));
  }
}

inline SequencePrefix thm15_forward(const Rational& p, const Rational& q, const Rational& r,
                                    const SequencePrefix& y) {
  thm15_scan_poles(p, q, r, y.size());
  const Rational c = r - q;
  const auto B = detail::bell_of(y);
  SequencePrefix x(y.size());
  for (size_t n = 1; n <= y.size(); ++n) {
    const Rational np = p * Rational(static_cast<long>(n));
    Rational acc(0);
    for (size_t k = 1; k <= n; ++k) {
      const Rational coef = q / (q + np) * rat_binomial(q + np, static_cast<unsigned>(k)) -
                            r / (r + np) * rat_binomial(r + np, static_cast<unsigned>(k));
      acc += coef * B[n - 1][k - 1];
    }
    x[n - 1] = acc / c;
  }
  return x;
}

inline SequencePrefix thm15_backward(const Rational& p, const Rational& q, const Rational& r,
                                     const SequencePrefix& x) {
  thm15_scan_poles(p, q, r, x.size());
  const Rational c = r - q;
  const auto B = detail::bell_of(x);
  SequencePrefix y(x.size());
  for (size_t n = 1; n <= x.size(); ++n) {
    const Rational np = p * Rational(static_cast<long>(n));
    Rational acc(0);
    for (size_t k = 1; k <= n; ++k) {
      Rational prod(1);
      for (size_t j = 1; j + 1 <= k; ++j)
        prod *= np + q * Rational(static_cast<long>(k)) + c * Rational(static_cast<long>(j)) -
                Rational(1);
      acc += prod / Rational(factorial(static_cast<unsigned>(k))) * B[n - 1][k - 1];
    }
    y[n - 1] = -acc;
  }
  return y;
}

// --- The general pair for a ProblemSpec. -----------------------------------

inline void general_scan_poles(const ProblemSpec& spec, size_t N) {
  for (size_t n = 1; n <= N; ++n) {
    const Rational np = spec.p() * Rational(static_cast<long>(n));
    for (size_t i = 0; i < spec.m(); ++i) {
      if ((np + spec.terms()[i].q).is_zero())
        throw SingularParameter("singular parameter: n*p + q_" + std::to_string(i + 1) +
                                    " = 0 at n = " + std::to_string(n),
                                static_cast<long>(n));
    }
  }
}

/// x_n = sum_k ( sum_i a_i q_i/(np+q_i) binom(np+q_i, k) ) B_{n,k}(y).
inline SequencePrefix general_forward(const ProblemSpec& spec, const SequencePrefix& y) {
  general_scan_poles(spec, y.size());
  const auto B = detail::bell_of(y);
  SequencePrefix x(y.size());
  for (size_t n = 1; n <= y.size(); ++n) {
    const Rational np = spec.p() * Rational(static_cast<long>(n));
    Rational acc(0);
    for (size_t k = 1; k <= n; ++k) {
      Rational coef(0);
      for (const auto& t : spec.terms()) {
        const Rational aq = t.a * t.q;
        if (aq.is_zero()) continue;
        coef += aq / (np + t.q) * rat_binomial(np + t.q, static_cast<unsigned>(k));
      }
      acc += coef * B[n - 1][k - 1];
    }
    x[n - 1] = acc;
  }
  return x;
}

/// Independent route to the same x: build phi = 1 + sum y_n t^n and read the
/// expansion of sum_i a_i phi^{q_i} in powers of t/phi^p off the Lagrange
/// coefficient formula. Shares only the series primitives with
/// general_forward, which makes the two an oracle pair.
inline SequencePrefix general_forward_series(const ProblemSpec& spec, const SequencePrefix& y) {
  const int N = static_cast<int>(y.size());
  Series<Rational> phi(N);
  phi.set_coeff(0, Rational(1));
  for (int j = 1; j <= N; ++j) phi.set_coeff(j, y[j - 1]);
  Series<Rational> G(N);
  for (const auto& t : spec.terms()) G += series_pow_rat(phi, t.q) * t.a;
  const auto coeffs = lagrange_coeffs(G, series_pow_rat(phi, spec.p()), N);
  return SequencePrefix(coeffs.begin() + 1, coeffs.end());
}

/// y_n = (1/(1-pn)) sum_k lambda_k(u = pn - 1) B_{n,k}(x); pn = 1 is singular
/// here (the lambda_k vanish at u = 0 and the closed form degenerates to 0/0).
inline SequencePrefix general_backward(const ProblemSpec& spec, const SequencePrefix& x) {
  const size_t N = x.size();
  for (size_t n = 1; n <= N; ++n)
    if ((spec.p() * Rational(static_cast<long>(n))).is_one())
      throw SingularParameter("singular order: p*n = 1 at n = " + std::to_string(n),
                              static_cast<long>(n));
  const LambdaTable lt = lambda_recurrence(spec, static_cast<int>(N));
  const auto B = detail::bell_of(x);
  SequencePrefix y(N);
  for (size_t n = 1; n <= N; ++n) {
    const Rational u = spec.p() * Rational(static_cast<long>(n)) - Rational(1);
    Rational acc(0);
    for (size_t k = 1; k <= n; ++k) acc += lt.lambda(k).eval(u) * B[n - 1][k - 1];
    y[n - 1] = acc / (Rational(1) - spec.p() * Rational(static_cast<long>(n)));
  }
  return y;
}

/// The m = 3 backward form y_n = -sum_k f_k(u = pn - 1)/(k! (-c_1)^k) B_{n,k}(x).
/// The 1/(1-pn) factor of the general form is absorbed into f, so pn = 1 is
/// not singular here. The f table is built by both available routes and
/// cross-checked before use.
inline SequencePrefix thm17_backward(const ProblemSpec& spec, const SequencePrefix& x) {
  if (spec.m() != 3) throw DomainError("thm17_backward requires m = 3");
  const size_t N = x.size();
  if (N == 0) return {};
  const FTable ft = f_recurrence(spec, static_cast<int>(N));
  const FTable ft_mina = f_via_mina_table(spec, static_cast<int>(N));
  if (!(ft.polys == ft_mina.polys))
    throw Error("f tables from the recurrence and the Mina route disagree");
  const Rational c1 = spec.c(1);
  const auto B = detail::bell_of(x);
  SequencePrefix y(N);
  for (size_t n = 1; n <= N; ++n) {
    const Rational u = spec.p() * Rational(static_cast<long>(n)) - Rational(1);
    Rational acc(0);
    for (size_t k = 1; k <= n; ++k) {
      acc += ft.f(k).eval(u) /
             (Rational(factorial(static_cast<unsigned>(k))) * (-c1).pow(static_cast<long>(k))) *
             B[n - 1][k - 1];
    }
    y[n - 1] = -acc;
  }
  return y;
}

/// Builds phi, f = t/phi^p, g = f^<-1>, w = t/g from an instance and asserts
/// the two structural series identities to order N:
///   phi(t/w(t)) = w^{-1/p}(t)   and   F(t) = sum_k a_k w^{-q_k/p}(t),
/// with F the series of general_forward's x-values.
inline std::vector<VerifyCase> pipeline_invariants(const ProblemSpec& spec,
                                                   const SequencePrefix& y, int N) {
  std::vector<VerifyCase> out;
  const std::string params = spec.describe();
  const std::string range = "order<=" + std::to_string(N);
  if (static_cast<int>(y.size()) < N)
    throw DomainError("pipeline_invariants needs y_1..y_N");

  Series<Rational> phi(N);
  phi.set_coeff(0, Rational(1));
  for (int j = 1; j <= N; ++j) phi.set_coeff(j, y[j - 1]);

  const Series<Rational> phi_p = series_pow_rat(phi, spec.p());
  const Series<Rational> f = series_recip(phi_p).shifted_up();  // order N+1
  const Series<Rational> g = series_comp_inverse(f);
  const Series<Rational> w = series_recip(g.shifted_down());    // t/g, order N

  // phi(t/w(t)) = phi(g(t)) = w^{-1/p}(t).
  const Series<Rational> lhs = series_compose(phi, g.truncated(N));
  const Series<Rational> rhs = series_pow_rat(w, -(Rational(1) / spec.p()));
  out.push_back(lhs == rhs
                    ? VerifyCase::pass("pipeline.phi_w_identity", params, range)
                    : VerifyCase::fail("pipeline.phi_w_identity", params, range,
                                       "phi(t/w) != w^{-1/p}"));

  try {
    const SequencePrefix x = general_forward(spec, SequencePrefix(y.begin(), y.begin() + N));
    Series<Rational> F(N);
    for (int n = 1; n <= N; ++n) F.set_coeff(n, x[n - 1]);
    Series<Rational> F_from_w(N);
    for (const auto& t : spec.terms())
      F_from_w += series_pow_rat(w, -(t.q / spec.p())) * t.a;
    out.push_back(F == F_from_w
                      ? VerifyCase::pass("pipeline.F_representation", params, range)
                      : VerifyCase::fail("pipeline.F_representation", params, range,
                                         "sum a_k w^{-q_k/p} != sum x_n t^n"));
  } catch (const SingularParameter& e) {
    out.push_back(VerifyCase::skipped("pipeline.F_representation", params, range, e.what()));
  }
  return out;
}

}  // namespace bellinv

#endif  // BELLINV_TRANSFORMS_HPP
