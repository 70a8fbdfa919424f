#include <catch2/catch_amalgamated.hpp>

#include "bellinv/bell.hpp"
#include "bellinv/rng.hpp"

using namespace bellinv;

namespace {

std::vector<Rational> random_values(Rng& rng, size_t n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rng.next_rational(8, 5);
  return v;
}

}  // namespace

TEST_CASE("bell polynomials, fixed shapes") {
  CHECK(bell_partition(5, 5) == MultiPoly::variable(1, 5));
  CHECK(bell_partition(7, 1) == MultiPoly::variable(7));
  CHECK(bell_partition(3, 2) ==
        MultiPoly::variable(1) * MultiPoly::variable(2) * Rational(2));
  CHECK(bell_partition(4, 2) ==
        MultiPoly::variable(1) * MultiPoly::variable(3) * Rational(2) +
            MultiPoly::variable(2, 2));
  CHECK_THROWS_AS(bell_partition(3, 4), DomainError);
  CHECK_THROWS_AS(bell_partition(3, 0), DomainError);
}

TEST_CASE("bell via generating function, fixed values") {
  const std::vector<Rational> one{Rational(1)};
  CHECK(bell_gf<Rational>(2, 2, one) == Rational(1));
  const std::vector<Rational> ones{Rational(1), Rational(1), Rational(1)};
  CHECK(bell_gf<Rational>(4, 2, ones) == Rational(3));
  CHECK_THROWS_AS(bell_gf<Rational>(4, 5, ones), DomainError);
}

TEST_CASE("partition and generating-function routes agree") {
  Rng rng(137);
  for (unsigned n = 1; n <= 9; ++n) {
    const auto f = random_values(rng, n);
    for (unsigned k = 1; k <= n; ++k) {
      const Rational via_gf = bell_gf<Rational>(n, k, f);
      const Rational via_partition =
          bell_partition(n, k).eval(std::span<const Rational>(f.data(), n - k + 1));
      CHECK(via_gf == via_partition);
    }
  }
}

TEST_CASE("bell rows") {
  const std::vector<Rational> c{Rational(7, 3)};
  const auto row1 = bell_row<Rational>(1, c);
  REQUIRE(row1.size() == 1);
  CHECK(row1[0] == Rational(7, 3));

  const std::vector<Rational> ones{Rational(1), Rational(1), Rational(1)};
  const auto row3 = bell_row<Rational>(3, ones);
  REQUIRE(row3.size() == 3);
  CHECK(row3[0] == Rational(1));
  CHECK(row3[1] == Rational(2));
  CHECK(row3[2] == Rational(1));

  Rng rng(31);
  const auto x = random_values(rng, 7);
  const auto row = bell_row<Rational>(7, x);
  for (unsigned k = 1; k <= 7; ++k) CHECK(row[k - 1] == bell_gf<Rational>(7, k, x));
}

TEST_CASE("bell homogeneity") {
  Rng rng(211);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational lam = rng.next_nonzero_rational(6, 4);
    for (unsigned n = 1; n <= 8; ++n) {
      const auto x = random_values(rng, n);
      for (unsigned k = 1; k <= n; ++k) {
        const Rational base = bell_gf<Rational>(n, k, x);

        // B_{n,k}(lam x_1, lam^2 x_2, ...) = lam^n B_{n,k}(x)
        std::vector<Rational> weighted(x);
        Rational w = lam;
        for (auto& v : weighted) {
          v *= w;
          w *= lam;
        }
        CHECK(bell_gf<Rational>(n, k, weighted) == lam.pow(n) * base);

        // B_{n,k}(lam x_1, lam x_2, ...) = lam^k B_{n,k}(x)
        std::vector<Rational> scaled(x);
        for (auto& v : scaled) v *= lam;
        CHECK(bell_gf<Rational>(n, k, scaled) == lam.pow(k) * base);
      }
    }
  }
}

TEST_CASE("bell table matches the row route") {
  Rng rng(307);
  const auto x = random_values(rng, 8);
  const auto table = bell_table<Rational>(8, x);
  for (unsigned n = 1; n <= 8; ++n) {
    REQUIRE(table[n - 1].size() == n);
    const auto row = bell_row<Rational>(n, std::span<const Rational>(x.data(), n));
    for (unsigned k = 1; k <= n; ++k) CHECK(table[n - 1][k - 1] == row[k - 1]);
  }
}
