#include <doctest.h>

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "eisproj/cusps.hpp"

using namespace eisproj;

namespace {

// Some g in SL_2(Z) with g(infinity) = x, as (p, q, r, s) = [[p, q], [r, s]].
std::array<Int, 4> lift(const Cusp& x) {
  // p s - q r = 1 with p = a, r = c.
  for (Int s = -std::abs(x.c) - 1; s <= std::abs(x.c) + 1; ++s)
    for (Int q = -std::abs(x.a) - 1; q <= std::abs(x.a) + 1; ++q)
      if (x.a * s - q * x.c == 1) return {x.a, q, x.c, s};
  throw std::logic_error("no lift");
}

// Every gamma with gamma(x) = y is +-g_y T^j g_x^{-1}; its lower left entry is
// affine in j, so scanning j mod N decides Gamma_0(N)-equivalence exactly.
bool brute_equivalent(const Cusp& x, const Cusp& y, Int N) {
  const auto gx = lift(x), gy = lift(y);
  const std::array<Int, 4> gxi = {gx[3], -gx[1], -gx[2], gx[0]};
  for (Int j = 0; j < N; ++j) {
    const std::array<Int, 4> m = {gy[0], gy[0] * j + gy[1], gy[2], gy[2] * j + gy[3]};
    const Int lower_left = m[2] * gxi[0] + m[3] * gxi[2];
    if (mod(lower_left, N) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("representatives") {
  const std::vector<Cusp> r24 = cusp_representatives(24);
  const std::vector<Cusp> expected = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 8}, {1, 12}, {1, 24}};
  CHECK(r24 == expected);
  CHECK(cusp_representatives(1).size() == 1);
  CHECK(cusp_representatives(12).size() == 6);
  for (Int N = 1; N <= 120; ++N) {
    Int count = 0;
    for (Int c : divisors(N)) count += euler_phi(std::gcd(c, N / c));
    REQUIRE(cusp_count(N) == count);
    REQUIRE(static_cast<Int>(cusp_representatives(N).size()) == count);
  }
}

TEST_CASE("equivalence examples") {
  CHECK(cusps_equivalent({1, 24}, {5, 24}, 24));
  CHECK_FALSE(cusps_equivalent({1, 2}, {1, 3}, 24));
  for (Int N = 1; N <= 30; ++N) CHECK(cusps_equivalent({1, 1}, make_cusp(0, 1), N));
  CHECK(make_cusp(2, -4) == Cusp{-1, 2});
  CHECK(to_string(Cusp{1, 0}) == "1/0");
}

TEST_CASE("representatives partition the cusps, against a matrix search") {
  for (Int N = 1; N <= 60; ++N) {
    const auto reps = cusp_representatives(N);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) REQUIRE_FALSE(brute_equivalent(reps[i], reps[j], N));
    for (Int c : divisors(N))
      for (Int a = 1; a <= c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        int hits = 0;
        for (const auto& r : reps) {
          const bool fast = cusps_equivalent({a, c}, r, N);
          REQUIRE(fast == brute_equivalent({a, c}, r, N));
          hits += fast;
        }
        REQUIRE(hits == 1);
      }
  }
}
