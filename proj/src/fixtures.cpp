#include "eisproj/fixtures.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace eisproj {

namespace {

CycNumber Q(long n, long d = 1) { return CycNumber(frac(n, d)); }

CycNumber Zpow(Int b, int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b), static_cast<unsigned long>(e));
  if (b < 0 && e % 2 == 1) v = -v;
  return CycNumber(Rational(v));
}

// (-1)^(num/2); num must be even.
long sign_half(long num) {
  if (num % 2 != 0) throw std::logic_error("sign_half: odd numerator");
  return ((num / 2) % 2 == 0) ? 1 : -1;
}

long neg1_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// sum_n coeff * sigma_{k-1}(eps, psi; n/d) q^n for 1 <= n <= T.
void add_sigma(QExpansion& out, const CycNumber& coeff, int k, const DirichletCharacter& eps,
               const DirichletCharacter& psi, Int d) {
  if (coeff.is_zero()) return;
  for (Int n = d; n <= out.truncation(); n += d) {
    const CycNumber s = sigma(k - 1, eps, psi, n / d);
    if (!s.is_zero()) out[n] += coeff * s;
  }
}

std::string describe(const CycNumber& x) {
  if (x.is_rational()) return x.rational_value().get_str();
  return x.str();
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

FixtureResult pass(std::string name, std::string what, Clock::time_point t0) {
  return {std::move(name), true, what, what, since(t0)};
}

FixtureResult fail(std::string name, std::string expected, std::string actual, Clock::time_point t0) {
  return {std::move(name), false, std::move(expected), std::move(actual), since(t0)};
}

// First n in [from, T] where the two series differ, as a fixture result.
FixtureResult compare_series(const std::string& name, const QExpansion& expected, const QExpansion& actual, Int from,
                             Int T, Clock::time_point t0) {
  for (Int n = from; n <= T; ++n)
    if (expected[n] != actual[n])
      return fail(name, "[" + std::to_string(n) + "] = " + describe(expected[n]),
                  "[" + std::to_string(n) + "] = " + describe(actual[n]), t0);
  return pass(name, "coefficients " + std::to_string(from) + ".." + std::to_string(T) + " agree", t0);
}

}  // namespace

CuspOracle eta_oracle(const EtaQuotient& f) {
  return [f](const Cusp& x) { return eta_constant_term(f, x); };
}

CuspOracle theta_oracle(const QuadraticForm& F, double cap) {
  return [F, cap](const Cusp& x) { return theta_cusp_constant(F, x.a, x.c, cap); };
}

CuspOracle eisenstein_oracle(int k, const EisKey& key) {
  return [k, key](const Cusp& x) { return eis_cusp_constant(k, key.eps, key.psi, key.d, x); };
}

CuspOracle Ld_oracle(Int d) {
  return [d](const Cusp& x) { return Ld_cusp_constant(d, x); };
}

EisCombination project_eta(const EtaQuotient& f) {
  const auto wc = weight_character(f);
  return project(wc.k, f.level, wc.chi, eta_oracle(f));
}

EisCombination project_theta(const QuadraticForm& F, double cap) {
  const auto lc = level_character(F);
  return project(lc.k, lc.level, lc.chi, theta_oracle(F, cap));
}

EtaQuotient f_eta(int k) {
  const Int e = 2 * k + 1;
  return {24, {{1, -e}, {2, e}, {3, e}, {8, e}, {12, e}, {24, -e}}};
}

EtaQuotient g_eta(int k) {
  EtaQuotient f{12, {{1, -(2 * k - 3)}, {2, -(2 * k - 2)}, {3, 6 * k - 5}, {4, 6 * k - 4}, {6, -(2 * k - 4)}, {12, -2 * k}}};
  std::erase_if(f.r, [](const auto& kv) { return kv.second == 0; });
  return f;
}

EtaQuotient h_eta(int k) {
  EtaQuotient f{27, {{3, -(2 * k - 1)}, {9, 6 * k - 4}, {27, 3}}};
  return f;
}

CycNumber f_constant_at_one(int k) {
  return -root_of_unity(4, 2 * k + 1) * sqrt_rational(Rational(6)) / (Zpow(3, k + 1) * Zpow(2, 3 * k + 2));
}

QExpansion f_eisenstein_closed_form(int k, Int T) {
  const auto one = DirichletCharacter();
  const auto chi = DirichletCharacter::kronecker(-24);
  const int w = 2 * k + 1;
  const CycNumber c = -Q(4 * k + 2) / generalized_bernoulli(w, chi);
  QExpansion out = QExpansion::constant(Q(1), T);
  add_sigma(out, c, w, one, chi, 1);
  add_sigma(out, c * Zpow(-24, k), w, chi, one, 1);
  return out;
}

QExpansion g_eisenstein_closed_form(int k, Int T) {
  const auto chi = DirichletCharacter::kronecker(12);
  QExpansion out = QExpansion::constant(Q(1), T);
  add_sigma(out, -Q(4 * k) / generalized_bernoulli(2 * k, chi), 2 * k, DirichletCharacter(), chi, 1);
  return out;
}

HCoefficients h_closed_form_coefficients(int k) {
  // cos(m pi / 3) and sqrt(3) sin(m pi / 3), m = k + 4.
  static const long cos2[6] = {2, 1, -1, -2, -1, 1};   // 2 cos
  static const long ssin2[6] = {0, 3, 3, 0, -3, -3};   // 2 sqrt(3) sin
  const int m = (k + 4) % 6;
  const CycNumber cosv = Q(cos2[m], 2), ssinv = Q(ssin2[m], 2);
  const CycNumber den = Zpow(3, 3 * k + 1) * (Zpow(3, 2 * k) - Q(1));
  // The printed factor in front reads B_{k, chi_1}; B_{2k} is the one that
  // reproduces the k = 1 specialization.
  const CycNumber front = -Q(4 * k) / generalized_bernoulli(2 * k, DirichletCharacter());
  HCoefficients h;
  h.a1 = front * (Q(neg1_pow(k)) - cosv) / den;
  h.a9 = front * (-cosv) / (Zpow(3, k + 1) * (Zpow(3, 2 * k) - Q(1)));
  h.b1 = front * ssinv / den;
  return h;
}

CycNumber sigma_coefficient(const EisCombination& comb, const EisKey& key) {
  const CycNumber a = comb.coeff(key);
  if (a.is_zero()) return a;
  return a * eisenstein_normalization(comb.k, key.eps, key.psi);
}

IntMatrix F_k_gram(int k) {
  static const Int block[4][4] = {{2, 0, 1, 1}, {0, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}};
  IntMatrix B(static_cast<std::size_t>(4 * k), std::vector<Int>(static_cast<std::size_t>(4 * k), 0));
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) B[static_cast<std::size_t>(4 * m + i)][static_cast<std::size_t>(4 * m + j)] = block[i][j];
  return B;
}

QExpansion F_k_eisenstein_closed_form(int k, Int T) {
  const DirichletCharacter one;
  const CycNumber c = -Q(4 * k) / ((Zpow(-2, k) + Q(1)) * generalized_bernoulli(2 * k, one));
  QExpansion out = QExpansion::constant(Q(1), T);
  add_sigma(out, c, 2 * k, one, one, 1);
  add_sigma(out, c * Zpow(-2, k), 2 * k, one, one, 2);
  return out;
}

QExpansion squares_eisenstein_closed_form(int k, Int T) {
  const DirichletCharacter one;
  QExpansion out = QExpansion::constant(Q(1), T);
  if (k % 2 == 0) {
    const CycNumber c = -Q(2 * k) / ((Zpow(2, k) - Q(1)) * generalized_bernoulli(k, one));
    const CycNumber ik = root_of_unity(4, k), mik = root_of_unity(4, -k);
    add_sigma(out, c * mik, k, one, one, 1);
    add_sigma(out, -c * (ik + Q(1)), k, one, one, 2);
    add_sigma(out, c * Zpow(2, k), k, one, one, 4);
  } else {
    const auto chi = DirichletCharacter::kronecker(-4);
    const CycNumber c = -Q(2 * k) / generalized_bernoulli(k, chi);
    add_sigma(out, c, k, one, chi, 1);
    add_sigma(out, c * (Q(2) * root_of_unity(4, 1)).pow(k - 1), k, chi, one, 1);
  }
  return out;
}

std::vector<Integer> brute_force_squares(int m, Int T) {
  std::vector<Integer> r(static_cast<std::size_t>(T + 1));
  r[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<Integer> next(r.size());
    for (Int n = 0; n <= T; ++n)
      for (Int x = -n; x <= n; ++x)
        if (x * x <= n) next[static_cast<std::size_t>(n)] += r[static_cast<std::size_t>(n - x * x)];
    r = std::move(next);
  }
  return r;
}

QuadraticForm mixed_form(int a, int b, Int p) {
  std::vector<Int> alphas(static_cast<std::size_t>(a), 1);
  alphas.insert(alphas.end(), static_cast<std::size_t>(b), p);
  return QuadraticForm::diagonal(alphas);
}

QExpansion mixed_closed_form(int a, int b, Int p, Int T) {
  if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0 || a + b < 4 || p < 3 || !is_prime(p))
    throw std::invalid_argument("mixed_closed_form: need odd a, b >= 1 with a + b >= 4 and an odd prime p");
  const int k = (a + b) / 2;
  const bool p1 = p % 4 == 1;
  const Int bp = p1 ? p : -p;
  const DirichletCharacter one, chp = DirichletCharacter::kronecker(bp), ch4 = DirichletCharacter::kronecker(-4),
                                chm = DirichletCharacter::kronecker(-4 * bp);
  const CycNumber pa = Zpow(p, (a - 1) / 2);
  QExpansion out = QExpansion::constant(Q(1), T);
  if (neg1_pow(k) == (p1 ? 1 : -1)) {
    const long x2 = kronecker(bp, 2);
    long a1, a2, a4, a5, a6;
    if (p1) {
      a1 = sign_half(k);
      a2 = sign_half(k + 2) - x2;
      a4 = sign_half(k);
      a5 = sign_half(k + 2) * x2 - 1;
      a6 = 1;
    } else {
      a1 = sign_half(k + a + 2);
      a2 = sign_half(k + a) - x2;
      a4 = sign_half(k - 1);
      a5 = sign_half(b + 1) + sign_half(k + 1) * x2;
      a6 = sign_half(b - 1);
    }
    // Printed with a leading "1 +"; the sign must be "-" (theta_F = E_F for
    // F(1,5;3), F(1,3;5), ... and the "+" form gives -r_F(n) there).
    const CycNumber c = -Q(2 * k) / ((Zpow(2, k) - Q(x2)) * generalized_bernoulli(k, chp));
    const CycNumber tk = Zpow(2, k);
    add_sigma(out, c * Q(a1), k, one, chp, 1);
    add_sigma(out, c * Q(a2), k, one, chp, 2);
    add_sigma(out, c * tk, k, one, chp, 4);
    add_sigma(out, pa * c * Q(a4), k, chp, one, 1);
    add_sigma(out, pa * c * Q(a5), k, chp, one, 2);
    add_sigma(out, pa * c * Q(a6) * tk, k, chp, one, 4);
  } else {
    CycNumber b2, b3, b4;
    if (p1) {
      b2 = Q(sign_half(k - 1), 2);
      b3 = Q(1);
      b4 = Q(sign_half(k - 1), 2);
    } else {
      b2 = Q(sign_half(k + a - 1), 2);
      b3 = Q(sign_half(b + 1));
      b4 = Q(sign_half(k), 2);
    }
    const CycNumber c = -Q(2 * k) / generalized_bernoulli(k, chm);
    const CycNumber tk = Zpow(2, k);
    add_sigma(out, c, k, one, chm, 1);
    add_sigma(out, c * b2 * tk, k, ch4, chp, 1);
    add_sigma(out, pa * c * b3, k, chp, ch4, 1);
    add_sigma(out, pa * c * b4 * tk, k, chm, one, 1);
  }
  return out;
}

Int count_points_E27A(Int p) {
  if (p == 3) throw std::invalid_argument("count_points_E27A: p = 3 is a bad prime");
  if (!is_prime(p)) throw std::invalid_argument("count_points_E27A: " + std::to_string(p) + " is not prime");
  std::vector<Int> lhs(static_cast<std::size_t>(p), 0);  // #y with y^2 + y = v
  for (Int y = 0; y < p; ++y) ++lhs[static_cast<std::size_t>(mod(y * y + y, p))];
  Int count = 1;
  for (Int x = 0; x < p; ++x) count += lhs[static_cast<std::size_t>(mod(x * x % p * x - 7, p))];
  return count;
}

QExpansion newform_27(Int T) {
  const auto h = h_eta(1);
  const auto comb = project_eta(h);
  return Q(-9) * (eta_qexp(h.r, T) - to_qexp(comb, T));
}

QExpansion newform_27_display(Int T) {
  const DirichletCharacter one, chi = DirichletCharacter::kronecker(-3);
  QExpansion out = Q(-9) * eta_qexp(h_eta(1).r, T);
  add_sigma(out, Q(1, 2), 2, one, one, 1);
  add_sigma(out, Q(-2), 2, one, one, 3);
  add_sigma(out, Q(3, 2), 2, one, one, 9);
  add_sigma(out, Q(1, 2), 2, chi, chi, 1);
  return out;
}

namespace {

// Distinct primitive characters with conductor dividing N and the parity of k.
std::vector<DirichletCharacter> characters_for(int k, Int N) {
  std::vector<DirichletCharacter> out;
  for (Int f : divisors(N))
    for (const auto& chi : DirichletCharacter::primitive_characters(f))
      if (chi.parity() == (k % 2 == 0 ? 1 : -1)) out.push_back(chi);
  return out;
}

std::vector<FixtureResult> suite_orthogonality() {
  std::vector<FixtureResult> out;
  for (int k = 2; k <= 7; ++k) {
    const auto t0 = Clock::now();
    std::size_t checked = 0;
    std::string bad;
    for (Int N = 1; N <= 60 && bad.empty(); ++N)
      for (Int L : divisors(N))
        for (Int M : divisors(N / L))
          for (const auto& eps : DirichletCharacter::primitive_characters(L))
            for (const auto& psi : DirichletCharacter::primitive_characters(M)) {
              if (eps.parity() * psi.parity() != (k % 2 == 0 ? 1 : -1) || !bad.empty()) continue;
              const auto rep = orthogonality_check(k, N, eps, psi);
              checked += rep.checked;
              if (!rep.ok()) bad = rep.violations.front();
            }
    const std::string name = "orthogonality k=" + std::to_string(k) + ", N <= 60";
    out.push_back(bad.empty() ? pass(name, std::to_string(checked) + " (c, d) pairs", t0)
                              : fail(name, "identity", bad, t0));
  }
  return out;
}

std::vector<FixtureResult> suite_appendix_table() {
  std::vector<FixtureResult> out;
  for (int k = 1; k <= 5; ++k) {
    const auto t0 = Clock::now();
    const auto f = f_eta(k);
    const std::string name = "f_" + std::to_string(k) + " constant terms at the cusps of Gamma_0(24)";
    FixtureResult r = pass(name, "8 cusps", t0);
    for (const Cusp& x : cusp_representatives(24)) {
      const CycNumber expected = x.c == 1 ? f_constant_at_one(k) : x.c == 24 ? Q(1) : Q(0);
      const CycNumber got = eta_constant_term(f, x);
      if (got != expected) {
        r = fail(name, to_string(x) + ": " + describe(expected), to_string(x) + ": " + describe(got), t0);
        break;
      }
    }
    r.seconds = since(t0);
    out.push_back(r);
  }
  return out;
}

std::vector<FixtureResult> suite_g1() {
  const auto t0 = Clock::now();
  const auto g = g_eta(1);
  const auto comb = project_eta(g);
  return {compare_series("g_1 equals its Eisenstein part", eta_qexp(g.r, 50), to_qexp(comb, 50), 0, 50, t0)};
}

std::vector<FixtureResult> suite_squares() {
  std::vector<FixtureResult> out;
  for (int m : {4, 8}) {
    const auto t0 = Clock::now();
    const auto comb = project_theta(QuadraticForm::diagonal(std::vector<Int>(static_cast<std::size_t>(m), 1)));
    const auto counts = brute_force_squares(m, 100);
    QExpansion expected(100);
    for (Int n = 0; n <= 100; ++n) expected[n] = CycNumber(Rational(counts[static_cast<std::size_t>(n)]));
    out.push_back(compare_series("sums of " + std::to_string(m) + " squares", expected, to_qexp(comb, 100), 0, 100, t0));
  }
  return out;
}

std::vector<FixtureResult> suite_tau691() {
  std::vector<FixtureResult> out;
  const Int T = 50;
  auto t0 = Clock::now();
  const QuadraticForm F(F_k_gram(6));
  const auto lc = level_character(F);
  if (lc.level != 2 || lc.k != 12 || !lc.chi.is_trivial())
    return {fail("F_6 level and character", "level 2, weight 12, chi_1",
                 "level " + std::to_string(lc.level) + ", weight " + std::to_string(lc.k) + ", " + lc.chi.label(), t0)};
  const auto comb = project(lc.k, lc.level, lc.chi, theta_oracle(F));
  const QExpansion E = to_qexp(comb, T);
  out.push_back(compare_series("E_theta(F_6) against the closed form", F_k_eisenstein_closed_form(6, T), E, 0, T, t0));

  t0 = Clock::now();
  const QExpansion residual = theta_qexp(F, T) - E;
  const QExpansion delta = eta_qexp({{1, 24}}, T);
  const CycNumber c = Q(64 * 81 * 19, 691);
  const QExpansion rhs = c * (delta + Q(64) * delta.substitute(2));
  const Int sturm = sturm_bound(12, 2);
  out.push_back(compare_series("theta(F_6) - E = c (Delta(z) + 64 Delta(2z)) to the Sturm bound " + std::to_string(sturm),
                               rhs, residual, 0, sturm, t0));

  // Recover tau from the residual alone and test the congruence.
  t0 = Clock::now();
  std::vector<Integer> tau(static_cast<std::size_t>(T + 1));
  std::string bad;
  for (Int n = 1; n <= T && bad.empty(); ++n) {
    CycNumber v = residual[n] / c;
    if (n % 2 == 0) v -= Q(64) * CycNumber(Rational(tau[static_cast<std::size_t>(n / 2)]));
    if (!v.is_rational() || v.rational_value().get_den() != 1) {
      bad = "tau(" + std::to_string(n) + ") = " + describe(v) + " is not an integer";
      break;
    }
    tau[static_cast<std::size_t>(n)] = v.rational_value().get_num();
    Integer s11 = 0;
    for (Int d : divisors(n)) {
      Integer dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), 11);
      s11 += dk;
    }
    const Integer diff = tau[static_cast<std::size_t>(n)] - s11;
    if (diff % 691 != 0) bad = "tau(" + std::to_string(n) + ") = " + tau[static_cast<std::size_t>(n)].get_str() +
                               ", sigma_11 = " + s11.get_str();
    if (CycNumber(Rational(tau[static_cast<std::size_t>(n)])) != delta[n])
      bad = "tau(" + std::to_string(n) + ") from theta differs from the eta product";
  }
  out.push_back(bad.empty() ? pass("tau(n) = sigma_11(n) mod 691, n <= 50", "congruence holds", t0)
                            : fail("tau(n) = sigma_11(n) mod 691, n <= 50", "congruence", bad, t0));
  return out;
}

std::vector<FixtureResult> suite_mixed() {
  std::vector<FixtureResult> out;
  const Int T = 40;
  for (Int p : {3, 5, 7})
    for (int s : {4, 6, 8})
      for (int a = 1; a < s; a += 2) {
        const int b = s - a;
        const auto t0 = Clock::now();
        const auto comb = project_theta(mixed_form(a, b, p));
        out.push_back(compare_series("F(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(p) + ")",
                                     mixed_closed_form(a, b, p, T), to_qexp(comb, T), 0, T, t0));
      }
  // Forms whose theta series has no cusp part through q^T: the closed form must
  // reproduce the lattice counts themselves.
  for (auto [a, b, p] : {std::tuple{1, 5, 3}, {5, 1, 3}, {1, 3, 5}, {3, 1, 5}}) {
    const auto t0 = Clock::now();
    const auto F = mixed_form(a, b, p);
    out.push_back(compare_series("F(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(p) +
                                     ") closed form against lattice counts",
                                 theta_qexp(F, T), mixed_closed_form(a, b, p, T), 0, T, t0));
  }
  return out;
}

std::vector<FixtureResult> suite_curve27() {
  std::vector<FixtureResult> out;
  auto t0 = Clock::now();
  std::string bad;
  for (Int p = 2; p < 200 && bad.empty(); ++p) {
    if (!is_prime(p) || p == 3) continue;
    const Int n = count_points_E27A(p);
    if (p % 3 == 1 && n % 9 != 0) bad = "p=" + std::to_string(p) + ": #E=" + std::to_string(n) + " not divisible by 9";
    if (p % 3 == 2 && n != p + 1) bad = "p=" + std::to_string(p) + ": #E=" + std::to_string(n) + " != p+1";
  }
  out.push_back(bad.empty() ? pass("#E_27A(F_p) congruences, p < 200", "all primes", t0)
                            : fail("#E_27A(F_p) congruences, p < 200", "congruences", bad, t0));

  t0 = Clock::now();
  const QExpansion nf = newform_27(50);
  bad.clear();
  for (Int p = 2; p < 50 && bad.empty(); ++p) {
    if (!is_prime(p) || p % 3 != 1) continue;
    const CycNumber expected = Q(p + 1 - count_points_E27A(p));
    if (nf[p] != expected) bad = "p=" + std::to_string(p) + ": [p]N_27 = " + describe(nf[p]) + ", p+1-#E = " + describe(expected);
  }
  out.push_back(bad.empty() ? pass("[p] N_27 = p + 1 - #E_27A(F_p), p < 50", "all primes 1 mod 3", t0)
                            : fail("[p] N_27 = p + 1 - #E_27A(F_p), p < 50", "equality", bad, t0));
  return out;
}

std::vector<FixtureResult> suite_idempotence() {
  std::vector<FixtureResult> out;
  for (int k = 2; k <= 5; ++k) {
    const auto t0 = Clock::now();
    std::size_t count = 0;
    std::string bad;
    for (Int N = 1; N <= 24 && bad.empty(); ++N)
      for (const auto& chi : characters_for(k, N)) {
        if (!bad.empty()) break;
        const bool w2 = k == 2 && chi.is_trivial();
        const auto pairs = eis_pairs(k, N, chi);
        auto check = [&](const EisCombination& comb, const EisKey* key, Int ld) {
          ++count;
          for (const auto& t : comb.terms) {
            if (w2 && t.key.eps.is_trivial() && t.key.psi.is_trivial()) continue;
            const bool hit = key && t.key == *key;
            if (t.coeff != (hit ? Q(1) : Q(0))) return false;
          }
          for (const auto& [d, c] : comb.Ld_terms)
            if (c != (d == ld ? Q(1) : Q(0))) return false;
          return true;
        };
        for (const auto& pair : pairs) {
          if (w2 && pair.eps.is_trivial() && pair.psi.is_trivial()) continue;
          for (Int d : pair.ds) {
            const EisKey key{pair.eps, pair.psi, d};
            if (!check(project(k, N, chi, eisenstein_oracle(k, key)), &key, 0))
              bad = "N=" + std::to_string(N) + " eps=" + key.eps.label() + " psi=" + key.psi.label() + " d=" + std::to_string(d);
          }
        }
        if (w2)
          for (Int d : divisors(N)) {
            if (d == 1) continue;
            if (!check(project(k, N, chi, Ld_oracle(d)), nullptr, d))
              bad = "N=" + std::to_string(N) + " L_" + std::to_string(d);
          }
      }
    const std::string name = "idempotence k=" + std::to_string(k) + ", N <= 24";
    out.push_back(bad.empty() ? pass(name, std::to_string(count) + " basis elements", t0)
                              : fail(name, "indicator combination", bad, t0));
  }
  return out;
}

std::vector<FixtureResult> suite_h1() {
  std::vector<FixtureResult> out;
  auto t0 = Clock::now();
  const auto comb = project_eta(h_eta(1));
  const DirichletCharacter one, chi3 = DirichletCharacter::kronecker(-3);
  // E_2 = 1 - 24 sum sigma(n) q^n.
  const std::vector<std::pair<EisKey, CycNumber>> expected = {
      {{one, one, 1}, Q(1, 18)}, {{one, one, 3}, Q(-2, 9)}, {{one, one, 9}, Q(1, 6)}, {{one, one, 27}, Q(0)},
      {{chi3, chi3, 1}, Q(1, 18)}, {{chi3, chi3, 3}, Q(0)}};
  std::string bad;
  for (const auto& [key, want] : expected) {
    const CycNumber got = key.eps.is_trivial() ? Q(-24) * comb.coeff(key) : sigma_coefficient(comb, key);
    if (got != want) {
      bad = key.eps.label() + "," + key.psi.label() + ",d=" + std::to_string(key.d) + ": expected " + describe(want) +
            ", got " + describe(got);
      break;
    }
  }
  out.push_back(bad.empty() ? pass("E_h1 coefficients 1/18, -2/9, 1/6, 1/18", "all four", t0)
                            : fail("E_h1 coefficients 1/18, -2/9, 1/6, 1/18", "display", bad, t0));
  t0 = Clock::now();
  out.push_back(compare_series("N_27 construction, n <= 30", newform_27_display(30), newform_27(30), 0, 30, t0));
  return out;
}

std::vector<FixtureResult> suite_eta_families() {
  std::vector<FixtureResult> out;
  const Int T = 30;
  for (int k = 1; k <= 3; ++k) {
    auto t0 = Clock::now();
    out.push_back(compare_series("E_f" + std::to_string(k) + " closed form", f_eisenstein_closed_form(k, T),
                                 to_qexp(project_eta(f_eta(k)), T), 0, T, t0));
    t0 = Clock::now();
    out.push_back(compare_series("E_g" + std::to_string(k) + " closed form", g_eisenstein_closed_form(k, T),
                                 to_qexp(project_eta(g_eta(k)), T), 0, T, t0));
    t0 = Clock::now();
    const auto comb = project_eta(h_eta(k));
    const auto h = h_closed_form_coefficients(k);
    const DirichletCharacter one, chi3 = DirichletCharacter::kronecker(-3);
    const std::string name = "E_h" + std::to_string(k) + " coefficients a_1, a_9, b_1";
    const CycNumber g1 = sigma_coefficient(comb, {one, one, 1}), g9 = sigma_coefficient(comb, {one, one, 9}),
                    gb = sigma_coefficient(comb, {chi3, chi3, 1});
    out.push_back(g1 == h.a1 && g9 == h.a9 && gb == h.b1
                      ? pass(name, "match", t0)
                      : fail(name, describe(h.a1) + ", " + describe(h.a9) + ", " + describe(h.b1),
                             describe(g1) + ", " + describe(g9) + ", " + describe(gb), t0));
  }
  return out;
}

const std::vector<std::pair<std::string, std::function<std::vector<FixtureResult>()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<std::vector<FixtureResult>()>>> r = {
      {"orthogonality", suite_orthogonality}, {"appendix-table", suite_appendix_table},
      {"g1", suite_g1},                       {"squares", suite_squares},
      {"tau691", suite_tau691},               {"mixed-sums", suite_mixed},
      {"curve27", suite_curve27},             {"idempotence", suite_idempotence},
      {"h1", suite_h1},                       {"eta-families", suite_eta_families}};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<FixtureResult> run_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn();
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown suite \"" + name + "\" (known: " + known + ")");
}

}  // namespace eisproj
