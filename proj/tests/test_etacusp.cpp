#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>

#include "eisproj/etacusp.hpp"
#include "eisproj/fixtures.hpp"

using namespace eisproj;

namespace {

using cx = std::complex<long double>;
const long double kPi = 3.141592653589793238462643383279502884L;

// log eta(tau) = pi i tau / 12 + log prod (1 - q^n); the product stays well
// inside long double range for the arguments used here.
cx log_eta(cx tau) {
  const cx q = std::exp(cx(0, 2 * kPi) * tau);
  cx prod = 1, qn = q;
  while (std::abs(qn) > 1e-21L) {
    prod *= cx(1) - qn;
    qn *= q;
  }
  return cx(0, kPi / 12) * tau + std::log(prod);
}

// [0]_{a/c} f by averaging (f|_k gamma)(x + i) over one period in x, with
// gamma = [[a, b], [c, d]]. f|gamma has period width * order(chi) and the
// window is centred where gamma z is highest.
cx numeric_constant_term(const EtaQuotient& f, const Cusp& x0) {
  const auto wc = weight_character(f);
  const Int N = f.level, a = x0.a, c = x0.c;
  Int b = 0, d = 0;
  for (d = 0; d <= c; ++d)
    if ((a * d - 1) % c == 0) {
      b = (a * d - 1) / c;
      break;
    }
  const long double period = static_cast<long double>(N / std::gcd(c * c, N) * wc.chi.order());
  const long double centre = -static_cast<long double>(d) / static_cast<long double>(c);
  const int samples = static_cast<int>(6 * period) + 16;
  cx total = 0;
  for (int j = 0; j < samples; ++j) {
    const cx z(centre + period * (static_cast<long double>(j) / samples - 0.5L), 1.0L);
    const cx gz = (cx(a) * z + cx(b)) / (cx(c) * z + cx(d));
    cx lg = -static_cast<long double>(wc.k) * std::log(cx(c) * z + cx(d));
    for (auto [m, r] : f.r) lg += static_cast<long double>(r) * log_eta(cx(m) * gz);
    total += std::exp(lg);
  }
  return total / static_cast<long double>(samples);
}

}  // namespace

TEST_CASE("weight and character") {
  for (int k = 1; k <= 4; ++k) {
    const auto f = weight_character(f_eta(k));
    CHECK(f.k == 2 * k + 1);
    CHECK(f.chi == DirichletCharacter::kronecker(-24));
    const auto g = weight_character(g_eta(k));
    CHECK(g.k == 2 * k);
    CHECK(g.chi == DirichletCharacter::kronecker(12));
    const auto h = weight_character(h_eta(k));
    CHECK(h.k == 2 * k);
    CHECK(h.chi.is_trivial());
  }
  CHECK_THROWS_AS(weight_character(parse_eta(4, "1:1")), std::invalid_argument);
  CHECK_THROWS_AS(weight_character(parse_eta(12, "1:1,3:1")), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta(12, "5:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta(12, "1:0"), std::invalid_argument);
  CHECK(to_string(parse_eta(12, "1:-3,2:2")) == "1:-3,2:2");
}

TEST_CASE("vanishing orders") {
  const auto f = f_eta(1);
  CHECK(vanishing_order(f, 2) > 0);
  CHECK(vanishing_order(f, 24) == 0);
  CHECK(vanishing_order(EtaQuotient{1, {{1, 24}}}, 1) == 1);
  CHECK_THROWS_AS(eta_constant_term(EtaQuotient{4, {{1, 8}, {4, -8}}}, {1, 4}), std::domain_error);
}

TEST_CASE("constant terms of f_k at the cusps of Gamma_0(24)") {
  for (int k = 1; k <= 5; ++k) {
    const auto f = f_eta(k);
    for (const Cusp& x : cusp_representatives(24)) {
      const CycNumber v = eta_constant_term(f, x);
      if (x.c == 1) CHECK(v == f_constant_at_one(k));
      else if (x.c == 24) CHECK(v == CycNumber(1L));
      else CHECK(v.is_zero());
    }
  }
  CHECK(eta_constant_term(f_eta(1), {1, 1}) ==
        root_of_unity(4, 1) * sqrt_cyclotomic(6) * CycNumber(frac(1, 288)));
}

TEST_CASE("constant terms against numerical evaluation") {
  for (const auto& f : {f_eta(1), g_eta(1), h_eta(1), f_eta(2)}) {
    for (const Cusp& x : cusp_representatives(f.level)) {
      const auto exact = eta_constant_term(f, x).to_complex();
      const cx num = numeric_constant_term(f, x);
      INFO(to_string(f) << " at " << to_string(x));
      CHECK(std::abs(cx(exact.real(), exact.imag()) - num) < 1e-9L);
    }
  }
}

namespace {

// Holomorphic eta quotients of level N with |r_d| <= bound that pass the
// weight/character checks.
std::vector<EtaQuotient> valid_quotients(Int N, Int bound) {
  const auto ds = divisors(N);
  std::vector<EtaQuotient> out;
  std::vector<Int> r(ds.size(), -bound);
  while (true) {
    EtaQuotient f{N, {}};
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (r[i]) f.r[ds[i]] = r[i];
    bool ok = !f.r.empty();
    for (Int c : ds) ok = ok && vanishing_order(f, c) >= 0;
    if (ok) {
      try {
        weight_character(f);
        out.push_back(f);
      } catch (const std::invalid_argument&) {
      }
    }
    std::size_t i = 0;
    while (i < r.size() && r[i] == bound) r[i++] = -bound;
    if (i == r.size()) break;
    ++r[i];
  }
  return out;
}

}  // namespace

TEST_CASE("constant term at 1/N matches the q-expansion") {
  std::mt19937 rng(7);
  int tried = 0;
  for (auto [N, bound] : {std::pair<Int, Int>{12, 3}, {24, 2}, {27, 5}}) {
    auto pool = valid_quotients(N, bound);
    REQUIRE(pool.size() >= 10);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(10);
    for (const auto& f : pool) {
      ++tried;
      INFO(to_string(f));
      REQUIRE(eta_constant_term(f, {1, N}) == eta_qexp(f.r, 0)[0]);
      for (Int c : divisors(N)) {
        const CycNumber w = eta_constant_term(f, {1, c});
        if (!w.is_zero()) REQUIRE((w * w.conj()).is_rational());
      }
    }
  }
  CHECK(tried == 30);
}

TEST_CASE("equivalent cusps: chi(a) [0]_{a/c} f is invariant") {
  for (const auto& f : {f_eta(1), g_eta(2), h_eta(1)}) {
    const auto chi = weight_character(f).chi;
    for (Int c : divisors(f.level))
      for (Int a = 1; a <= c; ++a)
        for (Int a2 = a + 1; a2 <= c; ++a2) {
          if (std::gcd(a, c) != 1 || std::gcd(a2, c) != 1 || !cusps_equivalent({a, c}, {a2, c}, f.level)) continue;
          INFO(to_string(f) << " at " << a << "/" << c << " ~ " << a2 << "/" << c);
          REQUIRE(chi(a) * eta_constant_term(f, {a, c}) == chi(a2) * eta_constant_term(f, {a2, c}));
        }
  }
}
