#include "eisproj/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eisproj {

QExpansion::QExpansion(Int T) : c_(static_cast<std::size_t>(T < 0 ? 1 : T + 1)) {}

QExpansion::QExpansion(std::vector<CycNumber> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

QExpansion QExpansion::constant(const CycNumber& c, Int T) {
  QExpansion out(T);
  out[0] = c;
  return out;
}

QExpansion QExpansion::truncate(Int T) const {
  T = std::min(T, truncation());
  return QExpansion(std::vector<CycNumber>(c_.begin(), c_.begin() + T + 1));
}

QExpansion QExpansion::substitute(Int d) const {
  if (d < 1) throw std::invalid_argument("substitute: d must be positive");
  const Int T = truncation();
  QExpansion out(T);
  for (Int n = 0; n * d <= T; ++n) out[n * d] = (*this)[n];
  return out;
}

QExpansion QExpansion::pow(unsigned e) const {
  QExpansion result = constant(CycNumber(1L), truncation()), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool QExpansion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycNumber& x) { return x.is_zero(); });
}

QExpansion& QExpansion::operator+=(const QExpansion& rhs) {
  c_.resize(static_cast<std::size_t>(std::min(truncation(), rhs.truncation()) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!rhs.c_[i].is_zero()) c_[i] += rhs.c_[i];
  return *this;
}

QExpansion& QExpansion::operator-=(const QExpansion& rhs) {
  c_.resize(static_cast<std::size_t>(std::min(truncation(), rhs.truncation()) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!rhs.c_[i].is_zero()) c_[i] -= rhs.c_[i];
  return *this;
}

QExpansion& QExpansion::operator*=(const CycNumber& s) {
  for (auto& x : c_)
    if (!x.is_zero()) x *= s;
  return *this;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  const Int T = std::min(a.truncation(), b.truncation());
  QExpansion out(T);
  for (Int i = 0; i <= T; ++i) {
    if (a[i].is_zero()) continue;
    for (Int j = 0; i + j <= T; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool operator==(const QExpansion& a, const QExpansion& b) {
  const Int T = std::min(a.truncation(), b.truncation());
  for (Int i = 0; i <= T; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

CycNumber sigma(int kminus1, const DirichletCharacter& eps, const DirichletCharacter& psi, const Rational& n) {
  if (n.get_den() != 1 || sgn(n) <= 0) return CycNumber();
  if (!n.get_num().fits_slong_p()) throw std::overflow_error("sigma: argument too large");
  return sigma(kminus1, eps, psi, static_cast<Int>(n.get_num().get_si()));
}

CycNumber sigma(int kminus1, const DirichletCharacter& eps, const DirichletCharacter& psi, Int n) {
  if (n <= 0) return CycNumber();
  const Int oe = eps.order(), op = psi.order();
  const Int L = std::lcm(oe, op);
  CycAccumulator acc(L);
  for (Int d : divisors(n)) {
    const Int te = eps.value_exponent(n / d), tp = psi.value_exponent(d);
    if (te < 0 || tp < 0) continue;
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(kminus1));
    acc.add_root(te * (L / oe) + tp * (L / op), Rational(w));
  }
  return acc.result();
}

CycNumber eps_at_zero(const DirichletCharacter& eps) { return eps.conductor() == 1 ? CycNumber(1L) : CycNumber(); }

namespace {

void check_eisenstein_input(int k, const DirichletCharacter& eps, const DirichletCharacter& psi) {
  if (k < 1) throw std::invalid_argument("Eisenstein series need weight k >= 1");
  if (!eps.is_primitive() || !psi.is_primitive())
    throw std::invalid_argument("Eisenstein series need primitive characters, got " + eps.label() + ", " +
                                psi.label());
  if (eps.parity() * psi.parity() != (k % 2 == 0 ? 1 : -1))
    throw std::invalid_argument("parity mismatch: eps(-1) psi(-1) != (-1)^k for " + eps.label() + ", " +
                                psi.label() + ", k = " + std::to_string(k));
}

}  // namespace

CycNumber eisenstein_normalization(int k, const DirichletCharacter& eps, const DirichletCharacter& psi) {
  check_eisenstein_input(k, eps, psi);
  const Int L = eps.modulus(), M = psi.modulus();
  const DirichletCharacter omega = (eps * psi.conj()).primitive();
  const Int Mw = omega.modulus();
  const Rational ratio = frac(Mw, M);
  Rational ratio_k = 1;
  for (int i = 0; i < k; ++i) ratio_k *= ratio;
  CycNumber out(ratio_k);
  out *= gauss_sum(psi.conj()) / gauss_sum(omega);
  out *= CycNumber(Rational(-2 * k)) / generalized_bernoulli(k, omega.conj());
  for (Int p : prime_divisors(std::lcm(L, M))) {
    const CycNumber pk(Rational(Integer(ipow(p, k))));
    out *= pk / (pk - omega(p));
  }
  return out;
}

QExpansion eisenstein_qexp(int k, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d, Int T) {
  if (d < 1) throw std::invalid_argument("eisenstein_qexp: d must be positive");
  const CycNumber norm = eisenstein_normalization(k, eps, psi);
  QExpansion out(T);
  out[0] = eps_at_zero(eps);
  for (Int n = 1; n * d <= T; ++n) {
    const CycNumber s = sigma(k - 1, eps, psi, n);
    if (!s.is_zero()) out[n * d] = norm * s;
  }
  return out;
}

QExpansion weight2_Ld_qexp(Int d, Int T) {
  if (d <= 1) throw std::invalid_argument("L_d needs d > 1");
  const DirichletCharacter one;
  const QExpansion e2 = eisenstein_qexp(2, one, one, 1, T);
  return e2 - CycNumber(static_cast<long>(d)) * e2.substitute(d);
}

std::vector<Integer> eta_qexp_integer(const EtaExponents& r, Int T) {
  Int weighted = 0;
  for (auto [d, rd] : r) {
    if (d < 1) throw std::invalid_argument("eta quotient: divisors must be positive");
    weighted += d * rd;
  }
  if (weighted % 24 != 0)
    throw std::invalid_argument("eta quotient: sum d*r_d = " + std::to_string(weighted) +
                                " is not a multiple of 24, the expansion is not in integral powers of q");
  if (weighted < 0)
    throw std::invalid_argument("eta quotient: negative leading exponent " + std::to_string(weighted / 24));
  const Int shift = weighted / 24;
  std::vector<Integer> out(static_cast<std::size_t>(std::max<Int>(T, 0) + 1));
  if (shift > T) return out;
  const Int U = T - shift;
  std::vector<Integer> s(static_cast<std::size_t>(U + 1));
  s[0] = 1;
  for (auto [d, rd] : r) {
    for (Int m = d; m <= U; m += d) {
      for (Int rep = 0; rep < (rd < 0 ? -rd : rd); ++rep) {
        if (rd > 0) {
          for (Int i = U; i >= m; --i) s[static_cast<std::size_t>(i)] -= s[static_cast<std::size_t>(i - m)];
        } else {
          for (Int i = m; i <= U; ++i) s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - m)];
        }
      }
    }
  }
  for (Int i = 0; i <= U; ++i) out[static_cast<std::size_t>(i + shift)] = s[static_cast<std::size_t>(i)];
  return out;
}

QExpansion eta_qexp(const EtaExponents& r, Int T) {
  const auto ints = eta_qexp_integer(r, T);
  QExpansion out(T);
  for (Int i = 0; i <= T; ++i) out[i] = CycNumber(Rational(ints[static_cast<std::size_t>(i)]));
  return out;
}

Int gamma0_index(Int N) {
  Int mu = N;
  for (Int p : prime_divisors(N)) mu = mu / p * (p + 1);
  return mu;
}

Int sturm_bound(int k, Int N) { return k * gamma0_index(N) / 12; }

}  // namespace eisproj
