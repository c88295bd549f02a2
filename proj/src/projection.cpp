#include "eisproj/projection.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisproj {

namespace {

Rational rational_pow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

CycNumber int_pow(Int p, int k) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return CycNumber(Rational(v));
}

const std::vector<DirichletCharacter>& primitive_cached(Int f) {
  static std::map<Int, std::vector<DirichletCharacter>> cache;
  auto it = cache.find(f);
  if (it == cache.end()) it = cache.emplace(f, DirichletCharacter::primitive_characters(f)).first;
  return it->second;
}

// eps(p) conj(psi)(p).
CycNumber eps_psibar(const DirichletCharacter& eps, const DirichletCharacter& psi, Int p) {
  return eps(p) * psi(p).conj();
}

}  // namespace

std::vector<EisPair> eis_pairs(int k, Int N, const DirichletCharacter& chi) {
  std::vector<EisPair> out;
  if (N % chi.conductor() != 0) return out;
  if (chi.parity() != (k % 2 == 0 ? 1 : -1)) return out;
  const DirichletCharacter target = chi.primitive();
  for (Int L : divisors(N))
    for (Int M : divisors(N / L))
      for (const auto& eps : primitive_cached(L))
        for (const auto& psi : primitive_cached(M)) {
          if (eps.parity() * psi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
          if ((eps * psi).primitive() != target) continue;
          out.push_back({eps, psi, divisors(N / (L * M))});
        }
  return out;
}

CycNumber R_value(int k, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d, Int c) {
  const Int g = std::gcd(d, c);
  const CycNumber e = eps(-(d / g));
  if (e.is_zero()) return e;
  const CycNumber p = psi(c / g).conj();
  if (p.is_zero()) return p;
  return e * p * CycNumber(rational_pow(frac(g, c), k));
}

CycNumber S_value(int k, Int Nred, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d, Int c) {
  const Int g = std::gcd(d, c);
  const int mu = mobius(d / g * (c / g));
  if (mu == 0) return CycNumber();
  CycNumber out(static_cast<long>(mu));
  for (Int p : prime_divisors(g)) {
    const int vd = vp(p, d), vc = vp(p, c);
    if (vd > 0 && vd == vc && vc < vp(p, Nred)) {
      const CycNumber pk = int_pow(p, k);
      out *= (pk + eps_psibar(eps, psi, p)) / pk;
    }
  }
  return out;
}

CycNumber main_prefactor(int k, Int N, const DirichletCharacter& eps, const DirichletCharacter& psi) {
  CycNumber out(1L);
  for (Int p : prime_divisors(N)) {
    const CycNumber ep = eps_psibar(eps, psi, p);
    if (ep.is_zero()) continue;
    const CycNumber pk = int_pow(p, k);
    out *= pk / (pk - ep);
  }
  return out;
}

CycNumber eis_cusp_constant(int k, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d,
                            const Cusp& x0) {
  if (k == 2 && eps.is_trivial() && psi.is_trivial())
    throw std::invalid_argument("E_2(chi_1, chi_1; dz) is not modular; use L_d");
  const Cusp x = make_cusp(x0.a, x0.c);
  if (x.c == 0) return eps_at_zero(eps);
  const CycNumber pa = psi(x.a).conj();
  if (pa.is_zero()) return pa;
  return pa * R_value(k, eps, psi, x.c, psi.modulus() * d);
}

CycNumber Ld_cusp_constant(Int d, const Cusp& x0) {
  if (d <= 1) throw std::invalid_argument("L_d needs d > 1");
  const Cusp x = make_cusp(x0.a, x0.c);
  if (x.c == 0) return CycNumber(static_cast<long>(1 - d));
  const Int g = std::gcd(x.c, d);
  return CycNumber(frac(d - g * g, d));
}

CycNumber averaged_constant(const CuspOracle& f, Int c, const DirichletCharacter& psi) {
  CycNumber sum;
  for (Int a = 1; a <= c; ++a) {
    if (std::gcd(a, c) != 1) continue;
    const CycNumber w = psi(a);
    if (w.is_zero()) continue;
    const CycNumber v = f({a, c});
    if (!v.is_zero()) sum += w * v;
  }
  return sum * CycNumber(frac(1, euler_phi(c)));
}

CycNumber EisCombination::coeff(const EisKey& key) const {
  for (const auto& t : terms)
    if (t.key == key) return t.coeff;
  return CycNumber();
}

EisCombination project(int k, Int N, const DirichletCharacter& chi, const CuspOracle& f) {
  if (k < 2) throw std::invalid_argument("project: weight must be at least 2");
  if (N % chi.conductor() != 0)
    throw std::invalid_argument("project: conductor of " + chi.label() + " does not divide " + std::to_string(N));
  if (chi.parity() != (k % 2 == 0 ? 1 : -1))
    throw std::invalid_argument("project: parity mismatch, chi(-1) != (-1)^k for " + chi.label() +
                                ", k = " + std::to_string(k));
  EisCombination comb;
  comb.k = k;
  comb.N = N;
  comb.chi = chi.primitive();
  comb.weight2_trivial = k == 2 && comb.chi.is_trivial();

  std::map<std::pair<Int, Int>, CycNumber> memo;
  const CuspOracle cached = [&](const Cusp& x) {
    const auto key = std::make_pair(x.a, x.c);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, f(x)).first;
    return it->second;
  };

  for (const auto& pair : eis_pairs(k, N, comb.chi)) {
    const Int M = pair.psi.modulus();
    const Int Nred = N / (pair.eps.modulus() * M);
    const CycNumber pre = main_prefactor(k, N, pair.eps, pair.psi);
    std::map<Int, CycNumber> avg;
    for (Int c1 : divisors(Nred)) avg[c1] = averaged_constant(cached, c1 * M, pair.psi);
    for (Int d : pair.ds) {
      CycNumber sum;
      for (Int c1 : divisors(Nred)) {
        if (avg[c1].is_zero()) continue;
        const CycNumber s = S_value(k, Nred, pair.eps, pair.psi, d, c1);
        if (s.is_zero()) continue;
        sum += R_value(k, pair.eps, pair.psi, d, c1) * s * avg[c1];
      }
      comb.terms.push_back({{pair.eps, pair.psi, d}, pre * sum});
    }
  }

  if (comb.weight2_trivial) {
    CycNumber total, a1;
    for (const auto& t : comb.terms) {
      if (!t.key.eps.is_trivial() || !t.key.psi.is_trivial()) continue;
      if (t.key.d == 1) {
        a1 = t.coeff;
        continue;
      }
      const CycNumber c = -t.coeff * CycNumber(frac(1, t.key.d));
      comb.Ld_terms.emplace_back(t.key.d, c);
      total += c;
    }
    if (total != a1)
      throw std::logic_error("weight 2 identity failed: sum of L_d coefficients " + total.str() +
                             " differs from a_f(chi_1, chi_1, 1) = " + a1.str());
  }
  return comb;
}

CycNumber combination_cusp_constant(const EisCombination& comb, const Cusp& x) {
  CycNumber sum;
  for (const auto& t : comb.terms) {
    if (t.coeff.is_zero()) continue;
    if (comb.weight2_trivial && t.key.eps.is_trivial() && t.key.psi.is_trivial()) continue;
    sum += t.coeff * eis_cusp_constant(comb.k, t.key.eps, t.key.psi, t.key.d, x);
  }
  for (const auto& [d, c] : comb.Ld_terms)
    if (!c.is_zero()) sum += c * Ld_cusp_constant(d, x);
  return sum;
}

QExpansion to_qexp(const EisCombination& comb, Int T) {
  QExpansion out(T);
  for (const auto& t : comb.terms) {
    if (t.coeff.is_zero()) continue;
    out += t.coeff * eisenstein_qexp(comb.k, t.key.eps, t.key.psi, t.key.d, T);
  }
  return out;
}

OrthogonalityReport orthogonality_check(int k, Int N, const DirichletCharacter& eps, const DirichletCharacter& psi) {
  OrthogonalityReport rep;
  CycNumber diag(1L);
  for (Int p : prime_divisors(N)) {
    const CycNumber pk = int_pow(p, k);
    diag *= (pk - eps_psibar(eps, psi, p)) / pk;
  }
  const auto divs = divisors(N);
  std::map<std::pair<Int, Int>, CycNumber> R;
  for (Int a : divs)
    for (Int b : divs) R[{a, b}] = R_value(k, eps, psi, a, b);
  for (Int c : divs)
    for (Int d : divs) {
      CycNumber sum;
      for (Int t : divs) {
        const CycNumber s = S_value(k, N, eps, psi, c, t);
        if (s.is_zero()) continue;
        sum += s * R[{c, t}] * R[{t, d}];
      }
      const CycNumber expected = c == d ? diag : CycNumber();
      ++rep.checked;
      if (sum != expected) {
        std::ostringstream os;
        os << "k=" << k << " N=" << N << " eps=" << eps.label() << " psi=" << psi.label() << " c=" << c
           << " d=" << d << ": got " << sum.str() << ", expected " << expected.str();
        rep.violations.push_back(os.str());
      }
    }
  return rep;
}

}  // namespace eisproj
