#include <doctest.h>

#include <random>

#include "eisproj/cyclotomic.hpp"

using namespace eisproj;

namespace {

CycNumber random_element(std::mt19937& rng) {
  static const Int orders[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 36, 40, 48};
  std::uniform_int_distribution<int> pick(0, 15), coef(-5, 5), den(1, 4), terms(1, 4);
  const Int n = orders[pick(rng)];
  CycNumber x;
  for (int t = terms(rng); t > 0; --t)
    x += CycNumber(frac(coef(rng), den(rng))) * root_of_unity(n, std::uniform_int_distribution<Int>(0, n - 1)(rng));
  return x;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(1, 0) == CycNumber(1L));
  const CycNumber i = root_of_unity(4, 1);
  CHECK(i.order() == 4);
  CHECK(i.power_basis() == std::vector<Rational>{0, 1});
  CHECK(i * i == CycNumber(-1L));
  const CycNumber s = root_of_unity(8, 1) + root_of_unity(8, 7);
  CHECK(s * s == CycNumber(2L));
  CHECK(i.conj() == -i);
  CHECK((CycNumber(1L) + i) * (CycNumber(1L) - i) == CycNumber(2L));
  CHECK(root_of_unity(5, 1).inverse() == root_of_unity(5, 4));
  CHECK(root_of_unity(6, 1) == root_of_unity(12, 2));
  CHECK(root_of_unity(6, 1).order() == 3);
  CHECK(root_of_unity(2, 1) == CycNumber(-1L));
}

TEST_CASE("canonical form under promotion") {
  for (Int n = 1; n <= 30; ++n)
    for (Int j = 0; j < n; ++j)
      for (Int t = 1; t <= 4; ++t) REQUIRE(root_of_unity(n, j) == root_of_unity(n * t, j * t));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 300; ++it) {
    const CycNumber x = random_element(rng), y = random_element(rng);
    REQUIRE((x + y) - y == x);
    REQUIRE(x.conj().conj() == x);
    if (!y.is_zero()) REQUIRE((x * y) / y == x);
    REQUIRE(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
    REQUIRE(close((x + y).to_complex(), x.to_complex() + y.to_complex()));
    REQUIRE(close(x.conj().to_complex(), std::conj(x.to_complex())));
    REQUIRE(CycNumber::from_power_basis(x.order(), x.power_basis()) == x);
    const Int t = 7;
    if (std::gcd(t, x.order()) == 1) REQUIRE(x.galois(t).galois(inverse_mod(t, x.order())) == x);
  }
}

TEST_CASE("square roots") {
  CHECK(sqrt_cyclotomic(1) == CycNumber(1L));
  CHECK(sqrt_cyclotomic(2) == root_of_unity(8, 1) + root_of_unity(8, 7));
  CHECK(sqrt_cyclotomic(6) == sqrt_cyclotomic(2) * sqrt_cyclotomic(3));
  CHECK(sqrt_cyclotomic(6).to_complex().real() == doctest::Approx(2.449489742783178));
  for (Int s = 1; s <= 30; ++s) {
    if (!is_squarefree(s)) continue;
    const CycNumber r = sqrt_cyclotomic(s);
    REQUIRE(r * r == CycNumber(static_cast<long>(s)));
    REQUIRE(r.to_complex().real() > 0);
  }
  CHECK_THROWS_AS(sqrt_cyclotomic(12), std::domain_error);
  CHECK(sqrt_rational(frac(8, 9)) * sqrt_rational(frac(8, 9)) == CycNumber(frac(8, 9)));
  // Large numerator and denominator built from small primes.
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 6, 41);
  const CycNumber r = sqrt_rational(Rational(big, 5));
  CHECK(r * r == CycNumber(frac(big, 5)));
}

TEST_CASE("decimal output and exp_2pi_i") {
  CHECK(CycNumber(1L).to_complex() == std::complex<double>(1, 0));
  CHECK(root_of_unity(4, 1).to_complex().imag() == doctest::Approx(1.0));
  const auto [re, im] = sqrt_cyclotomic(6).to_decimal(10);
  CHECK(re == "2.4494897428");
  CHECK(im.find_first_not_of("-0.") == std::string::npos);
  CHECK(exp_2pi_i(frac(1, 4)) == root_of_unity(4, 1));
  CHECK(exp_2pi_i(frac(-7, 6)) == root_of_unity(6, 5));
}

TEST_CASE("cyclotomic polynomials and the power basis") {
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  const CycNumber z = root_of_unity(12, 1);
  CycNumber v;
  const auto phi = cyclotomic_polynomial(12);
  for (std::size_t i = 0; i < phi.size(); ++i) v += CycNumber(Rational(phi[i])) * z.pow(static_cast<long>(i));
  CHECK(v.is_zero());
}

TEST_CASE("accumulator agrees with direct sums") {
  for (Int n : {6, 10, 12, 18, 30}) {
    CycAccumulator acc(n);
    CycNumber direct;
    for (Int j = 0; j < n; ++j) {
      acc.add_root(j, frac(j + 1, 3));
      direct += CycNumber(frac(j + 1, 3)) * root_of_unity(n, j);
    }
    REQUIRE(acc.result() == direct);
  }
  CHECK_THROWS_AS(CycNumber().inverse(), std::domain_error);
  CHECK_THROWS_AS(root_of_unity(4, 1).rational_value(), std::domain_error);
}
