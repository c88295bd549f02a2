#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "eisproj/fixtures.hpp"
#include "eisproj/projection.hpp"

using namespace eisproj;

namespace {

const DirichletCharacter one;
DirichletCharacter kr(Int d) { return DirichletCharacter::kronecker(d); }

}  // namespace

TEST_CASE("R and S") {
  for (int k = 2; k <= 5; ++k) {
    CHECK(R_value(k, kr(-4), kr(-3), 1, 1) == kr(-4)(-1));
    CHECK(R_value(k, one, kr(-24), 1, 1) == CycNumber(1L));
    CHECK(S_value(k, 12, kr(5), one, 1, 1) == CycNumber(1L));
    CHECK(S_value(k, 12, one, one, 2, 1) == CycNumber(-1L));
  }
  CHECK(R_value(2, one, one, 1, 2) == CycNumber(frac(1, 4)));
  // d = c = p with 0 < v_p < v_p(Nred).
  const CycNumber p3 = CycNumber(27L);
  CHECK(S_value(3, 9, one, kr(-4), 3, 3) == (p3 + kr(-4)(3).conj()) / p3);
  CHECK(R_value(3, kr(-4), one, 2, 1).is_zero());
}

TEST_CASE("basis pairs") {
  const auto pairs = eis_pairs(3, 24, kr(-24));
  REQUIRE(pairs.size() == 4);
  std::vector<std::pair<Int, Int>> got;
  for (const auto& p : pairs) {
    got.emplace_back(kronecker_discriminant(p.eps), kronecker_discriminant(p.psi));
    CHECK(p.ds == std::vector<Int>{1});
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<Int, Int>>{{-24, 1}, {-3, 8}, {1, -24}, {8, -3}});
  CHECK(eis_pairs(4, 1, one).size() == 1);
  const auto p27 = eis_pairs(2, 27, one);
  REQUIRE(p27.size() == 2);
  CHECK(p27[0].ds == std::vector<Int>{1, 3, 9, 27});
  CHECK(p27[1].eps == kr(-3));
  CHECK(p27[1].psi == kr(-3));
  CHECK(p27[1].ds == std::vector<Int>{1, 3});
  CHECK(eis_pairs(3, 24, one).empty());
}

TEST_CASE("Eisenstein cusp constants") {
  CHECK(Ld_cusp_constant(2, {1, 1}) == CycNumber(frac(1, 2)));
  CHECK(Ld_cusp_constant(4, {1, 0}) == CycNumber(-3L));
  CHECK_THROWS_AS(eis_cusp_constant(2, one, one, 1, {1, 1}), std::invalid_argument);
  // M | c = N, d = 1: conj(psi)(a).
  for (Int a : {1, 5, 7, 11}) CHECK(eis_cusp_constant(3, one, kr(-24), 1, {a, 24}) == kr(-24)(a).conj());
  // M does not divide c.
  CHECK(eis_cusp_constant(3, one, kr(-24), 1, {1, 12}).is_zero());
  // Level one: the constant term at every cusp is the q^0 coefficient.
  CHECK(eis_cusp_constant(4, one, one, 1, {3, 7}) == CycNumber(1L));
}

TEST_CASE("averaged constants") {
  const CuspOracle f1 = eta_oracle(f_eta(1));
  CHECK(averaged_constant(f1, 24, kr(-24)) == CycNumber(1L));
  CHECK(averaged_constant([](const Cusp&) { return CycNumber(frac(3, 7)); }, 1, one) == CycNumber(frac(3, 7)));
  CHECK(averaged_constant([](const Cusp&) { return CycNumber(); }, 12, kr(12)).is_zero());
}

TEST_CASE("averaged constants collapse on Eisenstein series") {
  for (Int N : {24, 27})
    for (int k = 2; k <= 5; ++k)
      for (const Int cond : divisors(N)) {
        for (const auto& chi : DirichletCharacter::primitive_characters(cond)) {
          if (chi.parity() != (k % 2 == 0 ? 1 : -1) || (k == 2 && chi.is_trivial())) continue;
          const auto pairs = eis_pairs(k, N, chi);
          for (const auto& p1 : pairs)
            for (Int d : p1.ds)
              for (const auto& p2 : pairs)
                for (Int c : divisors(N)) {
                  if (c % p1.psi.modulus() != 0 || c % p2.psi.modulus() != 0) continue;
                  const CuspOracle f = eisenstein_oracle(k, {p1.eps, p1.psi, d});
                  const CycNumber avg = averaged_constant(f, c, p2.psi);
                  const CycNumber want = p1.psi == p2.psi ? eis_cusp_constant(k, p2.eps, p2.psi, d, {1, c}) : CycNumber();
                  REQUIRE(avg == want);
                }
        }
      }
}

TEST_CASE("averaged constants of L_d") {
  for (Int N : {12, 24, 27})
    for (const auto& p : eis_pairs(2, N, one))
      for (Int c : divisors(N)) {
        if (c % p.psi.modulus() != 0) continue;
        for (Int d : divisors(N)) {
          if (d == 1) continue;
          const CycNumber avg = averaged_constant(Ld_oracle(d), c, p.psi);
          REQUIRE(avg == (p.psi.is_trivial() ? Ld_cusp_constant(d, {1, c}) : CycNumber()));
        }
      }
}

TEST_CASE("projection of eta quotients") {
  const auto f1 = project_eta(f_eta(1));
  CHECK(f1.coeff({one, kr(-24), 1}) == CycNumber(1L));
  // (-24)^k sigma(chi_-24, chi_1) in the closed form.
  CHECK(sigma_coefficient(f1, {kr(-24), one, 1}) ==
        CycNumber(-24L) * eisenstein_normalization(3, one, kr(-24)));
  for (const auto& f : {f_eta(1), g_eta(1), h_eta(1), f_eta(2), h_eta(2)}) {
    const auto comb = project_eta(f);
    for (const Cusp& x : cusp_representatives(f.level))
      REQUIRE(eta_constant_term(f, x) == combination_cusp_constant(comb, x));
  }
}

TEST_CASE("projection of theta series") {
  const auto comb = project_theta(QuadraticForm::diagonal({1, 1, 1, 1}));
  CHECK(comb.weight2_trivial);
  const QExpansion E = to_qexp(comb, 50);
  CHECK(E[0] == CycNumber(1L));
  for (Int n = 1; n <= 50; ++n) {
    const CycNumber want = CycNumber(8L) * sigma(1, one, one, n) -
                           (n % 4 == 0 ? CycNumber(32L) * sigma(1, one, one, n / 4) : CycNumber());
    REQUIRE(E[n] == want);
  }
  CycNumber total;
  for (const auto& [d, c] : comb.Ld_terms) total += c;
  CHECK(total == comb.coeff({one, one, 1}));
}

TEST_CASE("weight 2 identity for L_d and level 4 theta") {
  for (Int N : {4, 8, 12})
    for (Int d : divisors(N)) {
      if (d == 1) continue;
      const auto comb = project(2, N, one, Ld_oracle(d));
      CycNumber total;
      for (const auto& [dd, c] : comb.Ld_terms) {
        total += c;
        REQUIRE(c == (dd == d ? CycNumber(1L) : CycNumber()));
      }
      REQUIRE(total == comb.coeff({one, one, 1}));
      REQUIRE(to_qexp(comb, 30) == weight2_Ld_qexp(d, 30));
    }
  const auto th = project_theta(QuadraticForm::diagonal({1, 1, 1, 1}));
  REQUIRE(th.Ld_terms.size() == 2);
}

TEST_CASE("to_qexp") {
  EisCombination empty;
  empty.k = 4;
  CHECK(to_qexp(empty, 5).is_zero());
  EisCombination e4;
  e4.k = 4;
  e4.terms.push_back({{one, one, 1}, CycNumber(1L)});
  CHECK(to_qexp(e4, 10) == eisenstein_qexp(4, one, one, 1, 10));
}

TEST_CASE("orthogonality") {
  const auto r1 = orthogonality_check(4, 1, one, one);
  CHECK(r1.checked == 1);
  CHECK(r1.ok());
  const auto r24 = orthogonality_check(3, 24, one, kr(-24));
  CHECK(r24.checked == 64);
  CHECK(r24.ok());
  for (Int p : {2, 3, 5}) CHECK(orthogonality_check(2, p * p, one, one).ok());
}

TEST_CASE("input checks") {
  const CuspOracle zero = [](const Cusp&) { return CycNumber(); };
  CHECK_THROWS_AS(project(3, 12, one, zero), std::invalid_argument);
  CHECK_THROWS_AS(project(2, 12, kr(-24), zero), std::invalid_argument);
  CHECK_THROWS_AS(project(1, 4, kr(-4), zero), std::invalid_argument);
}
