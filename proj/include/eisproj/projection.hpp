#pragma once

// Eisenstein part of a modular form in M_k(Gamma_0(N), chi) from its constant
// terms at cusps.
//
// The space of Eisenstein series has the basis E_k(eps, psi; dz) over primitive
// pairs (eps, psi) with conductors L, M, LM | N, eps psi = chi, parity (-1)^k,
// and d | N/LM. For k = 2 and trivial chi the pair (chi_1, chi_1) contributes
// L_d = E_2(z) - d E_2(dz), 1 < d | N, instead.

#include <functional>
#include <string>
#include <vector>

#include "eisproj/cusps.hpp"
#include "eisproj/qseries.hpp"

namespace eisproj {

struct EisKey {
  DirichletCharacter eps;
  DirichletCharacter psi;
  Int d = 1;
  friend bool operator==(const EisKey& a, const EisKey& b) {
    return a.eps == b.eps && a.psi == b.psi && a.d == b.d;
  }
};

struct EisPair {
  DirichletCharacter eps;
  DirichletCharacter psi;
  std::vector<Int> ds;  // divisors of N / LM
};

/// All primitive pairs for (k, N, chi), ordered by (L, M). Empty when
/// chi(-1) != (-1)^k or the conductor of chi does not divide N.
std::vector<EisPair> eis_pairs(int k, Int N, const DirichletCharacter& chi);

/// R_{k,eps,psi}(d, c) = eps(-d/g) conj(psi)(c/g) (g/c)^k, g = gcd(d, c).
CycNumber R_value(int k, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d, Int c);

/// S_{k,Nred,eps,psi}(d, c) = mu(dc/g^2) prod (p^k + eps(p) conj(psi)(p)) / p^k over
/// p | g with 0 < v_p(d) = v_p(c) < v_p(Nred).
CycNumber S_value(int k, Int Nred, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d, Int c);

/// prod_{p | N} p^k / (p^k - eps(p) conj(psi)(p)).
CycNumber main_prefactor(int k, Int N, const DirichletCharacter& eps, const DirichletCharacter& psi);

/// [0]_{a/c} E_k(eps, psi; dz) = conj(psi)(a) R(c, Md). Throws
/// std::invalid_argument for (2, chi_1, chi_1), which is not modular.
CycNumber eis_cusp_constant(int k, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d,
                            const Cusp& x);

/// [0]_{a/c} L_d = (d - gcd(c, d)^2) / d, d > 1.
CycNumber Ld_cusp_constant(Int d, const Cusp& x);

/// Returns [0]_{a/c} f for a reduced cusp a/c with c | N.
using CuspOracle = std::function<CycNumber(const Cusp&)>;

/// (1/phi(c)) sum_{a mod c, gcd(a, c) = 1} psi(a) [0]_{a/c} f.
CycNumber averaged_constant(const CuspOracle& f, Int c, const DirichletCharacter& psi);

struct EisTerm {
  EisKey key;
  CycNumber coeff;
};

struct EisCombination {
  int k = 0;
  Int N = 1;
  DirichletCharacter chi;
  /// a_f(eps, psi, d) on E_k(eps, psi; dz), for every basis key. In the
  /// weight 2, trivial character case the (chi_1, chi_1) entries are the
  /// coefficients of E_2(dz) for every d | N.
  std::vector<EisTerm> terms;
  /// Weight 2, trivial character: c_f(d) on L_d for 1 < d | N.
  std::vector<std::pair<Int, CycNumber>> Ld_terms;
  bool weight2_trivial = false;

  /// Coefficient of a key (zero if absent).
  CycNumber coeff(const EisKey& key) const;
};

/// The Eisenstein part of f, computed from its cusp constants. Throws
/// std::invalid_argument on parity mismatch, k < 2, or a character whose
/// conductor does not divide N; throws
/// std::logic_error if the weight 2 consistency identity fails.
EisCombination project(int k, Int N, const DirichletCharacter& chi, const CuspOracle& f);

/// The constant term of the combination at a cusp.
CycNumber combination_cusp_constant(const EisCombination& comb, const Cusp& x);

/// sum of coefficient times basis q-expansion, through q^T.
QExpansion to_qexp(const EisCombination& comb, Int T);

struct OrthogonalityReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks sum_{t | N} S(c, t) R(c, t) R(t, d) = [c = d] prod_{p | N} (p^k - eps(p) conj(psi)(p)) / p^k
/// for all c, d | N.
OrthogonalityReport orthogonality_check(int k, Int N, const DirichletCharacter& eps, const DirichletCharacter& psi);

}  // namespace eisproj
