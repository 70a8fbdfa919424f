#ifndef BELLINV_RNG_HPP
#define BELLINV_RNG_HPP

#include <cstdint>
#include <string_view>

#include "bellinv/rational.hpp"

namespace bellinv {

/// Deterministic splitmix64 stream. Used instead of <random> distributions so
/// that seeded runs are byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
  long next_long(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
  }

  /// Small rational with |numerator| <= max_num, denominator in [1, max_den].
  /// Kept small on purpose: bignum growth over ten Bell convolutions stays
  /// manageable while the arithmetic is still nontrivial.
  Rational next_rational(long max_num = 20, long max_den = 10) {
    return Rational(next_long(-max_num, max_num), next_long(1, max_den));
  }

  Rational next_nonzero_rational(long max_num = 20, long max_den = 10) {
    for (;;) {
      Rational r = next_rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// Independent stream for a labelled sub-task; stable under reordering of
  /// sibling tasks.
  Rng fork(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return Rng(state_ ^ h);
  }

 private:
  std::uint64_t state_;
};

}  // namespace bellinv

#endif  // BELLINV_RNG_HPP
