#include "eisproj/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisproj {

namespace {

// Q(zeta_n) for n not 2 mod 4, as a tensor product over p^e || n.
struct Layout {
  Int n = 1;
  std::vector<Int> p, e, pe, phi;
  std::vector<Int> stride;   // into the reduced (tensor basis) array
  std::vector<Int> fstride;  // into the full array of size n
  Int dim = 1;
  Int fdim = 1;

  explicit Layout(Int order) : n(order) {
    for (auto [prime, ex] : factorize(order)) {
      p.push_back(prime);
      e.push_back(ex);
      pe.push_back(ipow(prime, ex));
      phi.push_back(pe.back() / prime * (prime - 1));
    }
    const std::size_t r = p.size();
    stride.assign(r, 1);
    fstride.assign(r, 1);
    for (std::size_t a = r; a-- > 0;) {
      stride[a] = dim;
      fstride[a] = fdim;
      dim *= phi[a];
      fdim *= pe[a];
    }
  }

  std::size_t axes() const { return p.size(); }
  Int digit(Int idx, std::size_t a) const { return (idx / stride[a]) % phi[a]; }
  int axis_of(Int prime) const {
    for (std::size_t a = 0; a < p.size(); ++a)
      if (p[a] == prime) return static_cast<int>(a);
    return -1;
  }
};

Int normalize_order(Int n) { return n % 4 == 2 ? n / 2 : n; }

// Reduce a full array (exponents mod p^e per axis) to the tensor basis.
std::vector<Rational> reduce_full(const Layout& L, std::vector<Rational> cur) {
  std::vector<Int> dims(L.pe);
  for (std::size_t a = 0; a < L.axes(); ++a) {
    Int outer = 1, inner = 1;
    for (std::size_t b = 0; b < a; ++b) outer *= dims[b];
    for (std::size_t b = a + 1; b < L.axes(); ++b) inner *= dims[b];
    const Int pe = L.pe[a], ph = L.phi[a], q = pe / L.p[a];
    std::vector<Rational> next(static_cast<std::size_t>(outer * ph * inner));
    for (Int o = 0; o < outer; ++o)
      for (Int s = 0; s < pe; ++s)
        for (Int i = 0; i < inner; ++i) {
          const Rational& v = cur[static_cast<std::size_t>((o * pe + s) * inner + i)];
          if (sgn(v) == 0) continue;
          if (s < ph) {
            next[static_cast<std::size_t>((o * ph + s) * inner + i)] += v;
          } else {
            const Int r = s - ph;
            for (Int t = 0; t + 1 < L.p[a]; ++t)
              next[static_cast<std::size_t>((o * ph + r + t * q) * inner + i)] -= v;
          }
        }
    cur = std::move(next);
    dims[a] = ph;
  }
  return cur;
}

// Try to move x (order n, tensor coefficients c) into a proper subfield.
// Returns true and updates n, c if a smaller order was found.
bool descend_once(Int& n, std::vector<Rational>& c) {
  const Layout L(n);
  for (std::size_t a = 0; a < L.axes(); ++a) {
    const Int p = L.p[a];
    const bool drop_axis = (p != 2 && L.e[a] == 1) || (p == 2 && L.e[a] == 2);
    bool ok = true;
    for (Int idx = 0; idx < L.dim && ok; ++idx) {
      if (sgn(c[static_cast<std::size_t>(idx)]) == 0) continue;
      const Int j = L.digit(idx, a);
      ok = drop_axis ? j == 0 : j % p == 0;
    }
    if (!ok) continue;
    const Int m = drop_axis ? n / L.pe[a] : n / p;
    const Layout S(m);
    std::vector<Rational> out(static_cast<std::size_t>(S.dim));
    for (Int idx = 0; idx < L.dim; ++idx) {
      if (sgn(c[static_cast<std::size_t>(idx)]) == 0) continue;
      Int nidx = 0;
      for (std::size_t b = 0; b < L.axes(); ++b) {
        Int j = L.digit(idx, b);
        const int sb = S.axis_of(L.p[b]);
        if (sb < 0) continue;
        if (b == a) j /= p;
        nidx += j * S.stride[static_cast<std::size_t>(sb)];
      }
      out[static_cast<std::size_t>(nidx)] = c[static_cast<std::size_t>(idx)];
    }
    n = m;
    c = std::move(out);
    return true;
  }
  return false;
}

std::vector<Rational> embed(Int from, const std::vector<Rational>& c, const Layout& big) {
  if (from == big.n) return c;
  const Layout L(from);
  std::vector<Rational> out(static_cast<std::size_t>(big.dim));
  for (Int idx = 0; idx < L.dim; ++idx) {
    if (sgn(c[static_cast<std::size_t>(idx)]) == 0) continue;
    Int nidx = 0;
    for (std::size_t a = 0; a < L.axes(); ++a) {
      const auto b = static_cast<std::size_t>(big.axis_of(L.p[a]));
      const Int j = L.digit(idx, a) * (big.pe[b] / L.pe[a]);
      nidx += j * big.stride[b];
    }
    out[static_cast<std::size_t>(nidx)] = c[static_cast<std::size_t>(idx)];
  }
  return out;
}

Int lcm_int(Int a, Int b) { return a / std::gcd(a, b) * b; }

// Applies zeta -> zeta^t on every axis (t a unit mod n, or -1).
std::vector<Rational> permute_exponents(const Layout& L, const std::vector<Rational>& c, Int t) {
  std::vector<Rational> full(static_cast<std::size_t>(L.fdim));
  for (Int idx = 0; idx < L.dim; ++idx) {
    if (sgn(c[static_cast<std::size_t>(idx)]) == 0) continue;
    Int f = 0;
    for (std::size_t a = 0; a < L.axes(); ++a) f += mod(L.digit(idx, a) * t, L.pe[a]) * L.fstride[a];
    full[static_cast<std::size_t>(f)] = c[static_cast<std::size_t>(idx)];
  }
  return reduce_full(L, std::move(full));
}

std::vector<Rational> multiply_in(const Layout& L, const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) {
  std::vector<std::vector<Int>> dx, dy;
  std::vector<Int> ix, iy;
  for (Int idx = 0; idx < L.dim; ++idx) {
    std::vector<Int> d(L.axes());
    for (std::size_t a = 0; a < L.axes(); ++a) d[a] = L.digit(idx, a);
    if (sgn(x[static_cast<std::size_t>(idx)]) != 0) {
      ix.push_back(idx);
      dx.push_back(d);
    }
    if (sgn(y[static_cast<std::size_t>(idx)]) != 0) {
      iy.push_back(idx);
      dy.push_back(d);
    }
  }
  std::vector<Rational> full(static_cast<std::size_t>(L.fdim));
  Rational tmp;
  for (std::size_t u = 0; u < ix.size(); ++u)
    for (std::size_t v = 0; v < iy.size(); ++v) {
      Int f = 0;
      for (std::size_t a = 0; a < L.axes(); ++a) {
        Int s = dx[u][a] + dy[v][a];
        if (s >= L.pe[a]) s -= L.pe[a];
        f += s * L.fstride[a];
      }
      mpq_mul(tmp.get_mpq_t(), x[static_cast<std::size_t>(ix[u])].get_mpq_t(),
              y[static_cast<std::size_t>(iy[v])].get_mpq_t());
      full[static_cast<std::size_t>(f)] += tmp;
    }
  return reduce_full(L, std::move(full));
}

}  // namespace

CycNumber::CycNumber() : order_(1), coeffs_(1) {}
CycNumber::CycNumber(long v) : order_(1), coeffs_{Rational(v)} {}
CycNumber::CycNumber(const Rational& q) : order_(1), coeffs_{q} { coeffs_[0].canonicalize(); }

CycNumber::CycNumber(Int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  while (order_ > 1 && descend_once(order_, coeffs_)) {
  }
}

CycNumber CycNumber::root_of_unity(Int n, Int j) {
  if (n < 1) throw std::domain_error("root_of_unity: n must be positive");
  CycAccumulator acc(n);
  acc.add_root(j, 1L);
  return acc.result();
}

CycNumber root_of_unity(Int n, Int j) { return CycNumber::root_of_unity(n, j); }

CycNumber CycNumber::from_power_basis(Int n, const std::vector<Rational>& coeffs) {
  CycAccumulator acc(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) acc.add_root(static_cast<Int>(i), coeffs[i]);
  return acc.result();
}

bool CycNumber::is_zero() const { return order_ == 1 && sgn(coeffs_[0]) == 0; }

const Rational& CycNumber::rational_value() const {
  if (order_ != 1) throw std::domain_error("CycNumber is not rational: " + str());
  return coeffs_[0];
}

std::vector<Integer> cyclotomic_polynomial(Int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed for every divisor.
  const auto divs = divisors(n);
  std::vector<std::vector<Integer>> phis;
  for (Int d : divs) {
    std::vector<Integer> num(static_cast<std::size_t>(d + 1));
    num[0] = -1;
    num[static_cast<std::size_t>(d)] = 1;
    for (std::size_t i = 0; i < phis.size(); ++i) {
      if (d % divs[i] != 0) continue;
      const auto& den = phis[i];
      const std::size_t dd = den.size() - 1;
      std::vector<Integer> quo(num.size() - dd);
      for (std::size_t k = num.size(); k-- > dd;) {
        const Integer q = num[k];  // den is monic
        quo[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= q * den[t];
      }
      num = std::move(quo);
    }
    phis.push_back(std::move(num));
  }
  return phis.back();
}

std::vector<Rational> CycNumber::power_basis() const {
  const Layout L(order_);
  std::vector<Rational> poly(static_cast<std::size_t>(order_));
  for (Int idx = 0; idx < L.dim; ++idx) {
    if (sgn(coeffs_[static_cast<std::size_t>(idx)]) == 0) continue;
    Int ex = 0;
    for (std::size_t a = 0; a < L.axes(); ++a) ex += L.digit(idx, a) * (order_ / L.pe[a]);
    poly[static_cast<std::size_t>(ex % order_)] += coeffs_[static_cast<std::size_t>(idx)];
  }
  const auto phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    const Rational q = poly[k];
    if (sgn(q) == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) poly[k - deg + t] -= q * Rational(phi[t]);
  }
  poly.resize(deg);
  return poly;
}

CycNumber CycNumber::conj() const {
  if (order_ == 1) return *this;
  return CycNumber(order_, permute_exponents(Layout(order_), coeffs_, -1));
}

CycNumber CycNumber::galois(Int t) const {
  if (std::gcd(t, order_) != 1) throw std::domain_error("galois: exponent not a unit");
  if (order_ == 1) return *this;
  return CycNumber(order_, permute_exponents(Layout(order_), coeffs_, t));
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  if (rhs.order_ == 1 && order_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const Int n = lcm_int(order_, rhs.order_);
  const Layout L(n);
  auto a = embed(order_, coeffs_, L);
  const auto b = embed(rhs.order_, rhs.coeffs_, L);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = CycNumber(n, std::move(a));
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber operator*(const CycNumber& x, const CycNumber& y) {
  if (x.order_ == 1 || y.order_ == 1) {
    const CycNumber& r = x.order_ == 1 ? x : y;
    const CycNumber& o = x.order_ == 1 ? y : x;
    const Rational& s = r.coeffs_[0];
    if (sgn(s) == 0) return CycNumber();
    CycNumber out = o;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }
  const Int n = lcm_int(x.order_, y.order_);
  const Layout L(n);
  return CycNumber(n, multiply_in(L, embed(x.order_, x.coeffs_, L), embed(y.order_, y.coeffs_, L)));
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }
CycNumber& CycNumber::operator/=(const CycNumber& rhs) { return *this = *this * rhs.inverse(); }

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber: division by zero");
  if (order_ == 1) return CycNumber(Rational(1) / coeffs_[0]);
  // Solve x * y = 1 in the tensor basis: column j of M is x times basis element j.
  const Layout L(order_);
  const auto D = static_cast<std::size_t>(L.dim);
  std::vector<std::vector<Rational>> M(D, std::vector<Rational>(D + 1));
  for (std::size_t j = 0; j < D; ++j) {
    std::vector<Rational> basis(D);
    basis[j] = 1;
    const auto col = multiply_in(L, coeffs_, basis);
    for (std::size_t i = 0; i < D; ++i) M[i][j] = col[i];
  }
  M[0][D] = 1;
  for (std::size_t c = 0; c < D; ++c) {
    std::size_t piv = c;
    while (piv < D && sgn(M[piv][c]) == 0) ++piv;
    if (piv == D) throw std::logic_error("CycNumber::inverse: singular multiplication matrix");
    std::swap(M[piv], M[c]);
    const Rational inv = Rational(1) / M[c][c];
    for (std::size_t k = c; k <= D; ++k) M[c][k] *= inv;
    for (std::size_t r = 0; r < D; ++r) {
      if (r == c || sgn(M[r][c]) == 0) continue;
      const Rational f = M[r][c];
      for (std::size_t k = c; k <= D; ++k) M[r][k] -= f * M[c][k];
    }
  }
  std::vector<Rational> y(D);
  for (std::size_t i = 0; i < D; ++i) y[i] = M[i][D];
  return CycNumber(order_, std::move(y));
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> CycNumber::to_complex() const {
  const Layout L(order_);
  std::complex<double> sum = 0;
  for (Int idx = 0; idx < L.dim; ++idx) {
    const auto& c = coeffs_[static_cast<std::size_t>(idx)];
    if (sgn(c) == 0) continue;
    Rational angle = 0;
    for (std::size_t a = 0; a < L.axes(); ++a) angle += frac(L.digit(idx, a), L.pe[a]);
    sum += c.get_d() * std::polar(1.0, 2 * M_PI * angle.get_d());
  }
  return sum;
}

std::pair<std::string, std::string> CycNumber::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  const Layout L(order_);
  double mag = 1;
  for (const auto& c : coeffs_) mag += std::fabs(c.get_d());
  const auto bits = static_cast<mpfr_prec_t>(std::log2(mag) + digits * 3.33 + 64 +
                                              4 * std::log2(static_cast<double>(L.dim) + 1));
  mpfr_t re, im, ang, cs, sn, cq, pi2;
  for (auto* v : {&re, &im, &ang, &cs, &sn, &cq, &pi2}) mpfr_init2(*v, bits);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_const_pi(pi2, MPFR_RNDN);
  mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
  for (Int idx = 0; idx < L.dim; ++idx) {
    const auto& c = coeffs_[static_cast<std::size_t>(idx)];
    if (sgn(c) == 0) continue;
    Rational angle = 0;
    for (std::size_t a = 0; a < L.axes(); ++a) angle += frac(L.digit(idx, a), L.pe[a]);
    mpfr_mul_q(ang, pi2, angle.get_mpq_t(), MPFR_RNDN);
    mpfr_sin_cos(sn, cs, ang, MPFR_RNDN);
    mpfr_set_q(cq, c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(cs, cs, cq, MPFR_RNDN);
    mpfr_mul(sn, sn, cq, MPFR_RNDN);
    mpfr_add(re, re, cs, MPFR_RNDN);
    mpfr_add(im, im, sn, MPFR_RNDN);
  }
  auto render = [&](mpfr_t v) {
    // Values that are exactly zero (e.g. the imaginary part of a real number)
    // are printed without a sign.
    mpfr_t eps;
    mpfr_init2(eps, 64);
    mpfr_set_ui(eps, 10, MPFR_RNDN);
    mpfr_pow_si(eps, eps, -(digits + 2), MPFR_RNDN);
    if (mpfr_cmpabs(v, eps) < 0) mpfr_set_zero(v, 1);
    mpfr_clear(eps);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, v);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  std::pair<std::string, std::string> out{render(re), render(im)};
  for (auto* v : {&re, &im, &ang, &cs, &sn, &cq, &pi2}) mpfr_clear(*v);
  return out;
}

std::string CycNumber::str() const {
  const auto pb = power_basis();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < pb.size(); ++i) {
    if (sgn(pb[i]) == 0) continue;
    Rational c = pb[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      else if (first && c == -1) os << "-";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycAccumulator::CycAccumulator(Int n) : user_order_(n), order_(normalize_order(n)) {
  if (n < 1) throw std::domain_error("CycAccumulator: order must be positive");
  const Layout L(order_);
  for (std::size_t a = 0; a < L.axes(); ++a) {
    axis_pe_.push_back(L.pe[a]);
    axis_fstride_.push_back(L.fstride[a]);
    axis_units_.push_back(inverse_mod(order_ / L.pe[a], L.pe[a]));
  }
  full_.resize(static_cast<std::size_t>(L.fdim));
}

void CycAccumulator::add_root(Int j, const Rational& coeff) {
  j = mod(j, user_order_);
  bool negate = false;
  if (user_order_ != order_) {
    // zeta_{2m}^j = (-1)^j zeta_m^{j (m+1)/2} for odd m.
    negate = j % 2 == 1;
    j = mod(j * ((order_ + 1) / 2), order_);
  }
  Int f = 0;
  for (std::size_t a = 0; a < axis_pe_.size(); ++a)
    f += mod(j * axis_units_[a], axis_pe_[a]) * axis_fstride_[a];
  if (negate) full_[static_cast<std::size_t>(f)] -= coeff;
  else full_[static_cast<std::size_t>(f)] += coeff;
}

void CycAccumulator::add_root(Int j, long coeff) { add_root(j, Rational(coeff)); }

CycNumber CycAccumulator::result() const {
  const Layout L(order_);
  return CycNumber(order_, reduce_full(L, full_));
}

CycNumber sqrt_cyclotomic(Int s) {
  if (s < 1 || !is_squarefree(s))
    throw std::domain_error("sqrt_cyclotomic: " + std::to_string(s) + " is not a positive squarefree integer");
  CycNumber out(1L);
  for (Int p : prime_divisors(s)) {
    if (p == 2) {
      out *= root_of_unity(8, 1) + root_of_unity(8, 7);
      continue;
    }
    CycAccumulator acc(p);
    for (Int a = 1; a < p; ++a) acc.add_root(a, static_cast<long>(kronecker(a, p)));
    CycNumber g = acc.result();
    if (p % 4 == 3) g *= -root_of_unity(4, 1);
    out *= g;
  }
  return out;
}

namespace {

// n = m^2 * s with s squarefree; s must fit in an Int. Trial division, then the
// cofactor (all primes above the bound) is a square, a prime or a product of
// two distinct primes, or too large to decide.
std::pair<Integer, Int> big_square_decomposition(Integer n) {
  Integer m = 1;
  Integer s = 1;
  for (unsigned long p = 2; p < 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) m *= p;
    if (e % 2) s *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      m *= sqrt(n);
    } else if (n < Integer(1000000) * 1000000 * 1000000) {
      s *= n;
    } else {
      throw std::overflow_error("sqrt_rational: cannot factor " + n.get_str());
    }
  }
  if (!s.fits_slong_p()) throw std::overflow_error("sqrt_rational: squarefree part too large");
  return {m, s.get_si()};
}

}  // namespace

CycNumber sqrt_rational(const Rational& q) {
  if (sgn(q) <= 0) throw std::domain_error("sqrt_rational: argument must be positive");
  // sqrt(n/d) = sqrt(n d) / d.
  const auto [m, s] = big_square_decomposition(q.get_num() * q.get_den());
  return sqrt_cyclotomic(s) * CycNumber(frac(m, q.get_den()));
}

CycNumber exp_2pi_i(const Rational& x) {
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!den.fits_slong_p()) throw std::overflow_error("exp_2pi_i: denominator too large");
  const Integer r = num % den;
  return root_of_unity(den.get_si(), r.get_si());
}

}  // namespace eisproj
