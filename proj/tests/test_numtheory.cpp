#include <doctest.h>

#include <numeric>

#include "eisproj/numtheory.hpp"

using namespace eisproj;

TEST_CASE("factorization and divisors") {
  CHECK(factorize(1).empty());
  CHECK(factorize(24) == Factorization{{2, 3}, {3, 1}});
  CHECK(factorize(691) == Factorization{{691, 1}});
  CHECK(divisors(24) == std::vector<Int>{1, 2, 3, 4, 6, 8, 12, 24});
  CHECK(prime_divisors(60) == std::vector<Int>{2, 3, 5});
  CHECK(euler_phi(24) == 8);
  CHECK(vp(2, 24) == 3);
  CHECK(vp(5, 24) == 0);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(is_prime(691));
  CHECK_FALSE(is_prime(1));
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(18));
}

TEST_CASE("Mobius and phi summed over divisors") {
  for (Int n = 1; n <= 10000; ++n) {
    Int smu = 0, sphi = 0;
    for (Int d : divisors(n)) {
      smu += mobius(d);
      sphi += euler_phi(d);
    }
    REQUIRE(smu == (n == 1 ? 1 : 0));
    REQUIRE(sphi == n);
  }
}

TEST_CASE("modular helpers") {
  CHECK(mod(-7, 5) == 3);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(ipow(3, 4) == 81);
  CHECK(square_decomposition(72) == std::pair<Int, Int>{6, 2});
  CHECK(square_decomposition(-12) == std::pair<Int, Int>{2, -3});
}

TEST_CASE("Kronecker symbol examples") {
  CHECK(kronecker(-4, 1) == 1);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(-24, -1) == -1);
}

TEST_CASE("Kronecker symbol: multiplicativity, zeros, Legendre oracle") {
  for (Int d = -200; d <= 200; ++d) {
    if (d == 0) continue;
    for (Int n = 1; n <= 200; ++n) {
      const int k = kronecker(d, n);
      REQUIRE((k == 0) == (std::gcd(d, n) > 1));
      for (Int m = 1; m * n <= 200; ++m) REQUIRE(kronecker(d, m * n) == kronecker(d, m) * k);
      if (n > 2 && is_prime(n) && mod(d, n) != 0) {
        // Quadratic residues by direct search.
        bool qr = false;
        for (Int x = 1; x < n && !qr; ++x) qr = mod(x * x - d, n) == 0;
        REQUIRE(k == (qr ? 1 : -1));
      }
    }
  }
}

TEST_CASE("fundamental discriminants") {
  for (Int d : {1, -3, -4, 5, -7, 8, -8, 12, -24, 28})
    CHECK(is_fundamental_discriminant(d));
  for (Int d : {0, 2, -1, 4, 9, 16, -12, 20})
    CHECK_FALSE(is_fundamental_discriminant(d));
}
