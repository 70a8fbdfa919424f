#ifndef BELLINV_BELL_HPP
#define BELLINV_BELL_HPP

#include <span>
#include <string>
#include <vector>

#include "bellinv/errors.hpp"
#include "bellinv/multipoly.hpp"
#include "bellinv/rational.hpp"

namespace bellinv {

/// Enumerates sigma_k(n): multiplicity vectors (i_1..i_{n-k+1}) with
/// sum i_j = k and sum j*i_j = n. Calls fn(multiplicities) per solution.
/// Recursive descent over part sizes, pruned by the two linear constraints.
template <class Fn>
void for_each_partition(unsigned n, unsigned k, Fn&& fn) {
  if (k < 1 || k > n) throw DomainError("require 1 <= k <= n for sigma_k(n)");
  const unsigned width = n - k + 1;
  std::vector<unsigned> mult(width, 0);
  auto descend = [&](auto&& self, unsigned j, unsigned count, unsigned weight) -> void {
    if (j == 1) {
      // i_1 is forced: count parts of size 1 must carry the remaining weight.
      if (count == weight) {
        mult[0] = count;
        fn(std::span<const unsigned>(mult));
        mult[0] = 0;
      }
      return;
    }
    const unsigned max_i = std::min(count, weight / j);
    for (unsigned i = 0; i <= max_i; ++i) {
      const unsigned rc = count - i, rw = weight - i * j;
      if (rw < rc) break;                   // every remaining part weighs at least 1
      if (rw > rc * (j - 1)) continue;      // smaller parts cannot carry the rest yet
      mult[j - 1] = i;
      self(self, j - 1, rc, rw);
      mult[j - 1] = 0;
    }
  };
  descend(descend, width, k, n);
}

/// Ordinary Bell polynomial B_{n,k}(x_1..x_{n-k+1}) as a symbolic polynomial,
/// built from the partition sum with weights k!/(i_1!...i_{n-k+1}!).
inline MultiPoly bell_partition(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw DomainError("bell_partition requires 1 <= k <= n");
  MultiPoly result;
  const BigInt k_fact = factorial(k);
  for_each_partition(n, k, [&](std::span<const unsigned> mult) {
    BigInt denom(1);
    std::vector<std::pair<unsigned, unsigned>> factors;
    for (unsigned j = 0; j < mult.size(); ++j) {
      if (mult[j] == 0) continue;
      denom *= factorial(mult[j]);
      factors.emplace_back(j + 1, mult[j]);
    }
    result += MultiPoly::term(Rational(k_fact / denom), std::move(factors));
  });
  return result;
}

/// B_{n,k} evaluated at ring elements f_1..f_{n-k+1} by coefficient
/// extraction: [t^n] (sum f_j t^j)^k, via k-1 truncated multiplications.
/// Deliberately independent of bell_partition; the two form an oracle pair.
template <class R>
R bell_gf(unsigned n, unsigned k, std::span<const R> f) {
  if (k < 1 || k > n) throw DomainError("bell_gf requires 1 <= k <= n");
  if (f.size() < n - k + 1)
    throw DomainError("bell_gf needs f_1..f_" + std::to_string(n - k + 1));
  // base[j] = f_j for 1 <= j <= n-k+1 (higher entries cannot reach [t^n] with k parts).
  std::vector<R> base(n + 1, R(0));
  for (unsigned j = 1; j <= n - k + 1; ++j) base[j] = f[j - 1];
  std::vector<R> acc = base;
  for (unsigned step = 1; step < k; ++step) {
    std::vector<R> next(n + 1, R(0));
    for (unsigned i = 0; i <= n; ++i) {
      if (acc[i].is_zero()) continue;
      for (unsigned j = 1; i + j <= n; ++j) next[i + j] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  return acc[n];
}

/// All of B_{N,1}..B_{N,N} would repeat work row by row, so the table route
/// keeps the running powers of f: table[n-1][k-1] = B_{n,k}(x) for
/// 1 <= k <= n <= N, from x = (x_1..x_N).
template <class R>
std::vector<std::vector<R>> bell_table(unsigned N, std::span<const R> x) {
  if (x.size() < N) throw DomainError("bell_table needs x_1..x_N");
  std::vector<std::vector<R>> table(N);
  for (unsigned n = 1; n <= N; ++n) table[n - 1].assign(n, R(0));
  std::vector<R> f(N + 1, R(0));
  for (unsigned j = 1; j <= N; ++j) f[j] = x[j - 1];
  std::vector<R> pw = f;
  for (unsigned k = 1; k <= N; ++k) {
    for (unsigned n = k; n <= N; ++n) table[n - 1][k - 1] = pw[n];
    if (k < N) {
      std::vector<R> next(N + 1, R(0));
      for (unsigned i = 0; i <= N; ++i) {
        if (pw[i].is_zero()) continue;
        for (unsigned j = 1; i + j <= N; ++j) next[i + j] += pw[i] * f[j];
      }
      pw = std::move(next);
    }
  }
  return table;
}

/// Row B_{n,1}..B_{n,n} at ring values x_1..x_n.
template <class R>
std::vector<R> bell_row(unsigned n, std::span<const R> x) {
  if (n < 1) throw DomainError("bell_row requires n >= 1");
  return bell_table<R>(n, x).back();
}

}  // namespace bellinv

#endif  // BELLINV_BELL_HPP
