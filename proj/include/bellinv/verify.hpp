#ifndef BELLINV_VERIFY_HPP
#define BELLINV_VERIFY_HPP

#include <string>
#include <vector>

#include "bellinv/bell.hpp"
#include "bellinv/json_io.hpp"
#include "bellinv/lambda.hpp"
#include "bellinv/mina.hpp"
#include "bellinv/problem_spec.hpp"
#include "bellinv/report.hpp"
#include "bellinv/rng.hpp"
#include "bellinv/transforms.hpp"

namespace bellinv {
namespace detail {

inline std::vector<Rational> random_values(Rng& rng, size_t n, bool first_nonzero = false) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rng.next_rational(8, 5);
  if (first_nonzero && !v.empty()) v[0] = rng.next_nonzero_rational(8, 5);
  return v;
}

inline Series<Rational> random_qseries(Rng& rng, int order, bool in_L1) {
  Series<Rational> s(order);
  for (int i = 0; i <= order; ++i) s.set_coeff(i, rng.next_rational(8, 5));
  if (in_L1) {
    s.set_coeff(0, Rational(0));
    s.set_coeff(1, rng.next_nonzero_rational(8, 5));
  }
  return s;
}

inline Series<Rational> resum(const std::vector<Rational>& coeffs, const Series<Rational>& base) {
  const int N = base.order();
  Series<Rational> acc = Series<Rational>::constant(N, coeffs[0]);
  Series<Rational> pw = Series<Rational>::constant(N, Rational(1));
  for (size_t n = 1; n < coeffs.size(); ++n) {
    pw = pw * base;
    acc += pw * coeffs[n];
  }
  return acc;
}

inline VerifyCase check(const std::string& id, const std::string& params,
                        const std::string& range, bool ok, const std::string& witness = "") {
  return ok ? VerifyCase::pass(id, params, range) : VerifyCase::fail(id, params, range, witness);
}

}  // namespace detail

/// Scalar-substrate invariants: the Pascal-type recurrence of the generalized
/// binomials, evaluation being a ring homomorphism, and serialize-parse being
/// a fixed point of the canonical JSON form.
inline std::vector<VerifyCase> algebra_suite_cases(int order, std::uint64_t seed) {
  std::vector<VerifyCase> out;
  Rng rng = Rng(seed).fork("algebra");
  (void)order;

  bool pascal = true;
  std::string witness;
  for (int trial = 0; trial < 30 && pascal; ++trial) {
    const Rational t = rng.next_rational();
    const unsigned k = static_cast<unsigned>(rng.next_long(1, 9));
    if (!(rat_binomial(t, k) ==
          rat_binomial(t - Rational(1), k - 1) * t / Rational(static_cast<long>(k)))) {
      pascal = false;
      witness = "t=" + t.to_string() + " k=" + std::to_string(k);
    }
  }
  out.push_back(detail::check("algebra.pascal_recurrence", "30 seeded points", "k<=9", pascal,
                              witness));

  auto random_poly = [&rng]() {
    MultiPoly p;
    const long terms = rng.next_long(1, 5);
    for (long t = 0; t < terms; ++t) {
      std::vector<std::pair<unsigned, unsigned>> factors;
      for (unsigned v = 1; v <= 4; ++v) {
        const unsigned e = static_cast<unsigned>(rng.next_long(0, 3));
        if (e > 0) factors.emplace_back(v, e);
      }
      p += MultiPoly::term(rng.next_rational(9, 4), factors);
    }
    return p;
  };

  bool homo = true;
  witness.clear();
  for (int trial = 0; trial < 10 && homo; ++trial) {
    const MultiPoly a = random_poly(), b = random_poly();
    std::map<unsigned, Rational> point;
    for (unsigned v = 1; v <= 4; ++v) point[v] = rng.next_rational(6, 4);
    if (!((a * b).eval(point) == a.eval(point) * b.eval(point) &&
          (a + b).eval(point) == a.eval(point) + b.eval(point))) {
      homo = false;
      witness = "trial " + std::to_string(trial);
    }
  }
  out.push_back(detail::check("algebra.eval_homomorphism", "10 seeded pairs", "4 vars", homo,
                              witness));

  bool fixed = true;
  witness.clear();
  for (int trial = 0; trial < 10 && fixed; ++trial) {
    const MultiPoly p = random_poly();
    const Json once = to_json(p);
    const MultiPoly reparsed = multipoly_from_json(once);
    if (!(reparsed == p && to_json(reparsed).dump() == once.dump())) {
      fixed = false;
      witness = once.dump();
    }
  }
  out.push_back(detail::check("algebra.serialization_fixed_point", "10 seeded polynomials", "-",
                              fixed, witness));
  return out;
}

/// Bell-kernel invariants: the partition/generating-function oracle pair and
/// both homogeneity gradings.
inline std::vector<VerifyCase> bell_suite_cases(int order, std::uint64_t seed) {
  std::vector<VerifyCase> out;
  Rng rng = Rng(seed).fork("bell");
  for (unsigned n = 1; n <= static_cast<unsigned>(order); ++n) {
    bool cross = true;
    std::string witness;
    for (int rep = 0; rep < 5 && cross; ++rep) {
      const auto f = detail::random_values(rng, n);
      for (unsigned k = 1; k <= n && cross; ++k) {
        const Rational gf = bell_gf<Rational>(n, k, f);
        const Rational part =
            bell_partition(n, k).eval(std::span<const Rational>(f.data(), n - k + 1));
        if (!(gf == part)) {
          cross = false;
          witness = "k=" + std::to_string(k) + " rep=" + std::to_string(rep);
        }
      }
    }
    out.push_back(detail::check("bell.cross_method", "5 seeded assignments",
                                "n=" + std::to_string(n), cross, witness));

    bool grading = true, counting = true;
    std::string gw, cw;
    const Rational lam = rng.next_nonzero_rational(6, 4);
    const auto x = detail::random_values(rng, n);
    for (unsigned k = 1; k <= n; ++k) {
      const Rational base = bell_gf<Rational>(n, k, x);
      std::vector<Rational> weighted(x), scaled(x);
      Rational w = lam;
      for (auto& v : weighted) {
        v *= w;
        w *= lam;
      }
      for (auto& v : scaled) v *= lam;
      if (grading && !(bell_gf<Rational>(n, k, weighted) == lam.pow(n) * base)) {
        grading = false;
        gw = "k=" + std::to_string(k);
      }
      if (counting && !(bell_gf<Rational>(n, k, scaled) == lam.pow(k) * base)) {
        counting = false;
        cw = "k=" + std::to_string(k);
      }
    }
    out.push_back(detail::check("bell.homogeneity_grading", "lambda=" + lam.to_string(),
                                "n=" + std::to_string(n), grading, gw));
    out.push_back(detail::check("bell.homogeneity_count", "lambda=" + lam.to_string(),
                                "n=" + std::to_string(n), counting, cw));
  }
  return out;
}

/// Series-engine invariants: inverse round trips, power additivity, Lagrange
/// re-substitution and basis-expansion round trips.
inline std::vector<VerifyCase> series_suite_cases(int order, std::uint64_t seed) {
  std::vector<VerifyCase> out;
  Rng rng = Rng(seed).fork("series");
  const int N = order;
  const std::string range = "order=" + std::to_string(N);

  for (int trial = 0; trial < 5; ++trial) {
    const std::string params = "seeded case " + std::to_string(trial);

    const auto f = detail::random_qseries(rng, N, true);
    const auto g = series_comp_inverse(f);
    out.push_back(detail::check("series.comp_inverse_round_trip", params, range,
                                series_compose(f, g) == Series<Rational>::identity(N) &&
                                    series_compose(g, f) == Series<Rational>::identity(N)));

    auto phi = detail::random_qseries(rng, N, false);
    phi.set_coeff(0, Rational(1));
    const Rational alpha = rng.next_rational(6, 4), beta = rng.next_rational(6, 4);
    out.push_back(detail::check("series.pow_rat_additivity",
                                "alpha=" + alpha.to_string() + " beta=" + beta.to_string(), range,
                                series_pow_rat(phi, alpha) * series_pow_rat(phi, beta) ==
                                    series_pow_rat(phi, alpha + beta)));

    auto base = detail::random_qseries(rng, N, false);
    base.set_coeff(0, rng.next_nonzero_rational(6, 4));
    const auto G = detail::random_qseries(rng, N, false);
    const auto coeffs = lagrange_coeffs(G, base, N);
    const auto t_over_base = series_recip(base).shifted_up().truncated(N);
    out.push_back(detail::check("series.lagrange_resubstitution", params, range,
                                detail::resum(coeffs, t_over_base) == G));

    const auto F = detail::random_qseries(rng, N, true);
    const auto S = detail::random_qseries(rng, N, false);
    out.push_back(detail::check("series.basis_expand_round_trip", params, range,
                                detail::resum(basis_expand(S, F), F) == S));
  }
  return out;
}

/// Lambda-engine invariants across routes, laws, golden values and the
/// canonical binomial-identity instance.
inline std::vector<VerifyCase> lambda_suite_cases(int order, std::uint64_t seed) {
  std::vector<VerifyCase> out;
  Rng rng = Rng(seed).fork("lambda");
  const int N = order;

  for (int trial = 0; trial < 5; ++trial) {
    const ProblemSpec spec = random_spec(rng, 2 + trial % 3);
    const std::string params = spec.describe();

    const LambdaTable lt = lambda_recurrence(spec, N);
    bool structure = true;
    for (int n = 1; n <= N && structure; ++n)
      structure = lt.lambda(n).degree() == n && lt.lambda(n).coeff(0).is_zero();
    out.push_back(detail::check("lambda.structure", params, "n<=" + std::to_string(N), structure));

    for (auto& c : verify_lambda_laws(spec, N, seed + trial)) out.push_back(std::move(c));

    const int Ni = std::min(N, 8);
    Rng y_rng = rng.fork("instance" + std::to_string(trial));
    const auto y1 = detail::random_values(y_rng, Ni, true);
    const auto y2 = detail::random_values(y_rng, Ni, true);
    const bool independent = lambda_from_instance(spec, y1, Ni).polys ==
                                 lambda_recurrence(spec, Ni).polys &&
                             lambda_from_instance(spec, y2, Ni).polys ==
                                 lambda_recurrence(spec, Ni).polys;
    out.push_back(detail::check("lambda.instance_independence", params,
                                "n<=" + std::to_string(Ni), independent));
  }

  // Closed product forms against the recurrence.
  {
    const Rational p(2), q(1), r(3);
    const ProblemSpec spec = m2_spec(p, q, r);
    const LambdaTable lt = lambda_recurrence(spec, 12);
    bool ok = true;
    for (unsigned n = 0; n <= 12 && ok; ++n) ok = lt.lambda(n) == lambda_closed_m2(p, q, r, n);
    out.push_back(detail::check("lambda.closed_m2", spec.describe(), "n<=12", ok));
  }
  {
    const ProblemSpec spec(Rational(2), {{Rational(1), Rational(1)},
                                         {Rational(2), Rational(1)},
                                         {Rational(-3), Rational(2)}});
    const LambdaTable lt = lambda_recurrence(spec, 10);
    bool ok = true;
    for (unsigned n = 0; n <= 10 && ok; ++n)
      ok = lt.lambda(n) == lambda_closed_m3_degenerate(spec, n);
    out.push_back(detail::check("lambda.closed_m3_degenerate", spec.describe(), "n<=10", ok));
  }

  // f-table: bridge, golden values at seeded specs, symbolic goldens.
  for (int trial = 0; trial < 3; ++trial) {
    const ProblemSpec spec = random_spec(rng, 3);
    for (auto& c : lambda_f_bridge(spec, std::min(N, 8))) out.push_back(std::move(c));

    const Rational c1 = spec.c(1), c2 = spec.c(2), c3 = spec.c(3);
    const FTable ft = f_recurrence(spec, 3);
    const bool goldens = ft.f(1) == UniPoly::one() &&
                         ft.f(2) == UniPoly{c2 / c1, Rational(1)} &&
                         ft.f(3) == UniPoly{(Rational(3) * c2 * c2 - c1 * c3) / (c1 * c1),
                                            Rational(3) * c2 / c1, Rational(1)};
    out.push_back(detail::check("f.golden_values", spec.describe(), "n<=3", goldens));
  }
  for (auto& c : f_goldens_symbolic()) out.push_back(std::move(c));

  // Canonical instance phi = 1 - t, p = 1: binomial identity and zero sum.
  for (int trial = 0; trial < 2; ++trial) {
    const ProblemSpec base = random_spec(rng, 2 + trial);
    const ProblemSpec spec(Rational(1), base.terms());
    const int Nb = std::max(N, 10);
    std::vector<Rational> x(Nb);
    for (int n = 1; n <= Nb; ++n) {
      Rational acc(0);
      for (const auto& t : spec.terms())
        acc += t.a * rat_binomial(t.q + Rational(n - 1), static_cast<unsigned>(n));
      x[n - 1] = (n % 2 == 0) ? acc : -acc;
    }
    const auto B = bell_table<Rational>(Nb, x);
    const LambdaTable lt = lambda_recurrence(spec, Nb);
    bool binom_ok = true, zero_ok = true;
    for (int n = 1; n <= Nb; ++n) {
      UniPoly sum;
      for (int k = 1; k <= n; ++k) sum += lt.lambda(k) * B[n - 1][k - 1];
      if (!(sum == rat_binomial_in_u(Rational(1), static_cast<unsigned>(n)))) binom_ok = false;
      if (n >= 2) {
        Rational at(0);
        for (int k = 1; k <= n; ++k)
          at += lt.lambda(k).eval(Rational(n - 1)) * B[n - 1][k - 1];
        if (!at.is_zero()) zero_ok = false;
      }
    }
    out.push_back(detail::check("lambda.example24_binomial_identity", spec.describe(),
                                "n<=" + std::to_string(Nb), binom_ok));
    out.push_back(detail::check("lambda.example24_zero_sum", spec.describe(),
                                "2<=n<=" + std::to_string(Nb), zero_ok));
  }
  return out;
}

/// Mina-engine invariants: golden table (with the documented C_{4,2}
/// deviation), route agreement, integrality, chi tail and the convolution
/// identities in both modes.
inline std::vector<VerifyCase> mina_suite_cases(int order, std::uint64_t seed) {
  std::vector<VerifyCase> out;
  const unsigned N = static_cast<unsigned>(std::max(order, 4));

  for (auto& c : mina_golden_cases()) out.push_back(std::move(c));
  for (auto& c : verify_mina_two_routes(N)) out.push_back(std::move(c));

  bool integral = true;
  std::string witness;
  for (unsigned n = 1; n <= N && integral; ++n)
    for (const auto& poly : mina_column(n))
      for (const auto& [mono, coef] : poly.terms())
        if (!coef.is_integer()) {
          integral = false;
          witness = "n=" + std::to_string(n);
        }
  out.push_back(detail::check("mina.integer_coefficients", "symbolic",
                              "n<=" + std::to_string(N), integral, witness));

  const auto chi = chi_columns(N);
  bool tail = true;
  for (const auto& col : chi)
    if (!(col.back() == LaurentEntry::one())) tail = false;
  out.push_back(detail::check("mina.chi_tail_one", "symbolic", "n<=" + std::to_string(N), tail));

  for (auto& c : verify_convolutions(N, ConvMode::Symbolic)) out.push_back(std::move(c));
  for (auto& c : verify_convolutions(N, ConvMode::RandomRational, seed)) out.push_back(std::move(c));

  Rng rng = Rng(seed).fork("mina");
  for (int trial = 0; trial < 3; ++trial) {
    const ProblemSpec spec = random_spec(rng, 3);
    const int Nf = std::min(static_cast<int>(N), 8);
    const bool agree = f_via_mina_table(spec, Nf).polys == f_recurrence(spec, Nf).polys;
    out.push_back(detail::check("mina.f_route_agreement", spec.describe(),
                                "n<=" + std::to_string(Nf), agree));
  }
  return out;
}

/// Transform invariants: exact round trips for every pair, specialization
/// coherence, the Lagrange-series oracle and the structural pipeline checks.
inline std::vector<VerifyCase> transforms_suite_cases(int order, std::uint64_t seed) {
  std::vector<VerifyCase> out;
  Rng rng = Rng(seed).fork("transforms");
  const size_t N = static_cast<size_t>(order);
  const std::string range = "N=" + std::to_string(N);

  auto round_trip_cases = [&](const char* id, auto&& forward, auto&& backward,
                              const std::string& params) {
    const auto x = detail::random_values(rng, N);
    try {
      const bool ok = backward(forward(x)) == x && forward(backward(x)) == x;
      out.push_back(detail::check(id, params, range, ok));
    } catch (const SingularParameter& e) {
      out.push_back(VerifyCase::skipped(id, params, range, e.what()));
    }
  };

  for (int trial = 0; trial < 20; ++trial) {
    Rational a(rng.next_long(-6, 6)), b(rng.next_long(-6, 6));
    if (a.is_zero() && b.is_zero()) b = Rational(1);
    round_trip_cases(
        "transforms.t13_round_trip",
        [&](const SequencePrefix& s) { return thm13_forward(a, b, s); },
        [&](const SequencePrefix& s) { return thm13_backward(a, b, s); },
        "a=" + a.to_string() + " b=" + b.to_string() + " case=" + std::to_string(trial));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = rng.next_rational(6, 4);
    const Rational b = rng.next_nonzero_rational(6, 4);
    round_trip_cases(
        "transforms.t14_round_trip",
        [&](const SequencePrefix& s) { return thm14_forward(a, b, s); },
        [&](const SequencePrefix& s) { return thm14_backward(a, b, s); },
        "a=" + a.to_string() + " b=" + b.to_string() + " case=" + std::to_string(trial));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Rational p = rng.next_nonzero_rational(5, 3);
    const Rational q = rng.next_nonzero_rational(5, 3);
    Rational r = rng.next_nonzero_rational(5, 3);
    if (r == q) r = q + Rational(1);
    round_trip_cases(
        "transforms.t15_round_trip",
        [&](const SequencePrefix& s) { return thm15_forward(p, q, r, s); },
        [&](const SequencePrefix& s) { return thm15_backward(p, q, r, s); },
        "p=" + p.to_string() + " q=" + q.to_string() + " r=" + r.to_string() +
            " case=" + std::to_string(trial));
  }

  for (int trial = 0; trial < 10; ++trial) {
    const ProblemSpec spec = random_spec(rng, 2 + trial % 3, static_cast<int>(N));
    const std::string params = spec.describe() + " case=" + std::to_string(trial);
    const auto y = detail::random_values(rng, N);
    const auto x = general_forward(spec, y);
    out.push_back(detail::check("transforms.general_series_oracle", params, range,
                                general_forward_series(spec, y) == x));
    out.push_back(detail::check("transforms.general_round_trip", params, range,
                                general_backward(spec, x) == y));
    if (spec.m() == 3) {
      out.push_back(detail::check("transforms.t17_equals_general", params, range,
                                  thm17_backward(spec, x) == general_backward(spec, x)));
    }
  }

  // Specialization: the two-term family reproduces the third pair.
  {
    const Rational p(2, 3), q(3), r(5);
    const ProblemSpec spec = m2_spec(p, q, r);
    const auto y = detail::random_values(rng, N);
    const auto x = detail::random_values(rng, N);
    const bool ok = general_forward(spec, y) == thm15_forward(p, q, r, y) &&
                    general_backward(spec, x) == thm15_backward(p, q, r, x);
    out.push_back(detail::check("transforms.t15_specialization", spec.describe(), range, ok));
  }

  for (int trial = 0; trial < 10; ++trial) {
    const ProblemSpec spec = random_spec(rng, 2 + trial % 3, 8);
    const auto y = detail::random_values(rng, 8);
    for (auto& c : pipeline_invariants(spec, y, 8)) out.push_back(std::move(c));
  }

  for (auto& c : series_suite_cases(order, seed)) out.push_back(std::move(c));
  return out;
}

/// Runs one named suite ("bell" also carries the scalar-algebra cases,
/// "transforms" the series-engine cases) or "all".
inline VerificationReport run_suite(const std::string& suite, int order, std::uint64_t seed) {
  VerificationReport report;
  report.suite = suite;
  report.order = order;
  report.seed = seed;
  if (order < 1) throw DomainError("verification order must be >= 1");

  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "bell") {
    report.add(algebra_suite_cases(order, seed));
    report.add(bell_suite_cases(order, seed));
    known = true;
  }
  if (all || suite == "lambda") {
    report.add(lambda_suite_cases(order, seed));
    known = true;
  }
  if (all || suite == "mina") {
    report.add(mina_suite_cases(order, seed));
    known = true;
  }
  if (all || suite == "transforms") {
    report.add(transforms_suite_cases(order, seed));
    known = true;
  }
  if (!known)
    throw DomainError("unknown suite \"" + suite + "\" (expected bell|lambda|mina|transforms|all)");
  report.sort_cases();
  return report;
}

}  // namespace bellinv

#endif  // BELLINV_VERIFY_HPP
