#include <doctest.h>

#include <numeric>

#include "eisproj/fixtures.hpp"

using namespace eisproj;

TEST_CASE("point counts") {
  CHECK(count_points_E27A(2) == 3);
  CHECK(count_points_E27A(5) == 6);
  CHECK(count_points_E27A(7) % 9 == 0);
  CHECK_THROWS_AS(count_points_E27A(3), std::invalid_argument);
  CHECK_THROWS_AS(count_points_E27A(9), std::invalid_argument);
  // #E = 9 [p] h_1 + (p + 1)(1 - chi_-3(p)) / 2.
  const auto h = eta_qexp_integer(h_eta(1).r, 100);
  for (Int p = 2; p <= 100; ++p) {
    if (!is_prime(p) || p == 3) continue;
    REQUIRE(count_points_E27A(p) == 9 * h[static_cast<std::size_t>(p)] + (p + 1) * (1 - kronecker(-3, p)) / 2);
  }
}

TEST_CASE("newform of level 27") {
  const QExpansion nf = newform_27(60);
  CHECK(nf[0].is_zero());
  CHECK(nf[1] == CycNumber(1L));
  // Hecke multiplicativity for coprime indices.
  for (Int m = 2; m <= 7; ++m)
    for (Int n = 2; m * n <= 60; ++n)
      if (std::gcd(m, n) == 1) REQUIRE(nf[m * n] == nf[m] * nf[n]);
}

TEST_CASE("closed forms against lattice counts") {
  for (int k : {2, 3, 4}) {
    const auto counts = brute_force_squares(2 * k, 40);
    const QExpansion E = squares_eisenstein_closed_form(k, 40);
    // No cusp forms for 4, 6 and 8 squares.
    for (Int n = 0; n <= 40; ++n) REQUIRE(E[n] == CycNumber(Rational(counts[static_cast<std::size_t>(n)])));
  }
  const QExpansion E = F_k_eisenstein_closed_form(6, 3);
  CHECK(E[1] == CycNumber(frac(1008, 691)));
  CHECK(theta_qexp(QuadraticForm(F_k_gram(6)), 1)[1] - E[1] == CycNumber(frac(64 * 81 * 19, 691)));
}

TEST_CASE("mixed closed form range checks") {
  CHECK_THROWS_AS(mixed_closed_form(2, 2, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(mixed_closed_form(1, 3, 9, 5), std::invalid_argument);
  CHECK_THROWS_AS(mixed_closed_form(1, 1, 3, 5), std::invalid_argument);
}

TEST_CASE("h_k closed-form coefficients, k = 1") {
  const auto h = h_closed_form_coefficients(1);
  CHECK(h.a1 == CycNumber(frac(1, 18)));
  CHECK(h.a9 == CycNumber(frac(1, 6)));
  CHECK(h.b1 == CycNumber(frac(1, 18)));
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  for (const auto& r : run_suite("appendix-table")) CHECK(r.passed);
  for (const auto& r : run_suite("eta-families")) CHECK(r.passed);
}
