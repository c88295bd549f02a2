#include <doctest.h>

#include <numeric>

#include "eisproj/qseries.hpp"

using namespace eisproj;

namespace {

QExpansion ints(std::vector<long> v) {
  std::vector<CycNumber> c;
  for (long x : v) c.emplace_back(x);
  return QExpansion(std::move(c));
}

}  // namespace

TEST_CASE("series operations") {
  CHECK(ints({1, 1, 0}) * ints({1, -1, 0}) == ints({1, 0, -1}));
  CHECK(ints({1, 1, 0, 0}).substitute(2) == ints({1, 0, 1, 0}));
  CHECK(ints({1, 1, 1, 1, 1}) * ints({1, -1, 0, 0, 0}) == ints({1, 0, 0, 0, 0}));
  CHECK(ints({1, 1, 0, 0}).pow(3) == ints({1, 3, 3, 1}));
  CHECK((ints({1, 2, 3}) - ints({1, 2, 3})).is_zero());
  CHECK((ints({1, 2, 3}) + ints({1, 2})).truncation() == 1);
}

TEST_CASE("generalized divisor sums") {
  const DirichletCharacter one;
  const auto c24 = DirichletCharacter::kronecker(-24), c4 = DirichletCharacter::kronecker(-4);
  CHECK(sigma(1, one, one, Int{6}) == CycNumber(12L));
  CHECK(sigma(0, one, c24, Int{1}) == CycNumber(1L));
  CHECK(sigma(2, c4, one, Int{2}) == CycNumber(4L));
  CHECK(sigma(1, one, one, frac(3, 2)).is_zero());
  CHECK(sigma(1, one, one, Rational(0)).is_zero());
  // Brute force and multiplicativity.
  for (Int n = 1; n <= 200; ++n) {
    CycNumber direct;
    for (Int d = 1; d <= n; ++d)
      if (n % d == 0) direct += c4(n / d) * c24(d) * CycNumber(static_cast<long>(d * d));
    REQUIRE(sigma(2, c4, c24, n) == direct);
    for (Int m = 1; m * n <= 200; ++m)
      if (std::gcd(m, n) == 1) REQUIRE(sigma(2, c4, c24, m * n) == sigma(2, c4, c24, m) * sigma(2, c4, c24, n));
  }
}

TEST_CASE("Eisenstein series") {
  const DirichletCharacter one;
  CHECK(eisenstein_qexp(2, one, one, 1, 3) == ints({1, -24, -72, -96}));
  CHECK(eisenstein_qexp(4, one, one, 1, 2) == ints({1, 240, 2160}));
  for (int k = 1; k <= 3; ++k) {
    const auto c24 = DirichletCharacter::kronecker(-24);
    CHECK(eisenstein_normalization(2 * k + 1, one, c24) ==
          -CycNumber(static_cast<long>(4 * k + 2)) / generalized_bernoulli(2 * k + 1, c24));
  }
  const auto E = eisenstein_qexp(3, DirichletCharacter::kronecker(-4), one, 3, 30);
  for (Int n = 1; n <= 30; ++n)
    if (n % 3 != 0) REQUIRE(E[n].is_zero());
  CHECK(weight2_Ld_qexp(4, 2)[0] == CycNumber(-3L));
  CHECK_THROWS_AS(weight2_Ld_qexp(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_qexp(3, one, one, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_qexp(2, DirichletCharacter::trivial(4), one, 1, 2), std::invalid_argument);
}

TEST_CASE("eta products") {
  const auto delta = eta_qexp_integer({{1, 24}}, 3);
  CHECK(delta == std::vector<Integer>{0, 1, -24, 252});
  // Fine's identity.
  const auto fine = eta_qexp({{1, -1}, {2, 1}, {3, 1}, {8, 1}, {12, 1}, {24, -1}}, 50);
  CHECK(fine[0] == CycNumber(1L));
  for (Int n = 1; n <= 50; ++n)
    REQUIRE(fine[n] == sigma(0, DirichletCharacter(), DirichletCharacter::kronecker(-24), n));
  CHECK(eta_qexp({}, 3) == ints({1, 0, 0, 0}));
  CHECK_THROWS_AS(eta_qexp({{1, 1}}, 3), std::invalid_argument);
}

TEST_CASE("Sturm bound") {
  CHECK(gamma0_index(12) == 24);
  CHECK(sturm_bound(12, 2) == 3);
  CHECK(sturm_bound(2, 12) == 4);
  CHECK(sturm_bound(4, 1) == 0);
}
