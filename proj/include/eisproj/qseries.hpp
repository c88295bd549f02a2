#pragma once

// Truncated q-expansions, generalized divisor sums, Eisenstein series with
// their standard normalization, eta products and the Sturm bound.

#include <map>
#include <vector>

#include "eisproj/characters.hpp"

namespace eisproj {

class QExpansion {
 public:
  /// Zero series known through q^T.
  explicit QExpansion(Int T = 0);
  explicit QExpansion(std::vector<CycNumber> coeffs);
  static QExpansion constant(const CycNumber& c, Int T);

  Int truncation() const { return static_cast<Int>(c_.size()) - 1; }
  const CycNumber& operator[](Int n) const { return c_[static_cast<std::size_t>(n)]; }
  CycNumber& operator[](Int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<CycNumber>& coeffs() const { return c_; }

  QExpansion truncate(Int T) const;
  /// q -> q^d.
  QExpansion substitute(Int d) const;
  QExpansion pow(unsigned e) const;
  bool is_zero() const;

  QExpansion& operator+=(const QExpansion& rhs);
  QExpansion& operator-=(const QExpansion& rhs);
  QExpansion& operator*=(const CycNumber& s);
  friend QExpansion operator+(QExpansion a, const QExpansion& b) { return a += b; }
  friend QExpansion operator-(QExpansion a, const QExpansion& b) { return a -= b; }
  friend QExpansion operator*(QExpansion a, const CycNumber& s) { return a *= s; }
  friend QExpansion operator*(const CycNumber& s, QExpansion a) { return a *= s; }
  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  friend bool operator==(const QExpansion& a, const QExpansion& b);

 private:
  std::vector<CycNumber> c_;
};

/// sigma_{k-1}(eps, psi; n) = sum_{d | n} eps(n/d) psi(d) d^{k-1}; zero unless
/// n is a positive integer.
CycNumber sigma(int kminus1, const DirichletCharacter& eps, const DirichletCharacter& psi, const Rational& n);
CycNumber sigma(int kminus1, const DirichletCharacter& eps, const DirichletCharacter& psi, Int n);

/// eps(0): 1 if eps has conductor 1, else 0.
CycNumber eps_at_zero(const DirichletCharacter& eps);

/// The factor in front of sum sigma_{k-1}(eps, psi; n) q^{nd} in
/// E_k(eps, psi; dz); eps and psi primitive, parity (-1)^k.
CycNumber eisenstein_normalization(int k, const DirichletCharacter& eps, const DirichletCharacter& psi);

/// E_k(eps, psi; dz) through q^T. Throws std::invalid_argument on a parity
/// mismatch or imprimitive characters. (2, chi_1, chi_1) gives the
/// quasi-modular E_2.
QExpansion eisenstein_qexp(int k, const DirichletCharacter& eps, const DirichletCharacter& psi, Int d, Int T);

/// L_d = E_2(z) - d E_2(dz), d > 1.
QExpansion weight2_Ld_qexp(Int d, Int T);

/// Exponents r_d of an eta quotient prod eta(dz)^{r_d}.
using EtaExponents = std::map<Int, Int>;

/// Integer coefficients of prod eta(dz)^{r_d} through q^T. Throws
/// std::invalid_argument unless sum d r_d is a non-negative multiple of 24.
std::vector<Integer> eta_qexp_integer(const EtaExponents& r, Int T);
QExpansion eta_qexp(const EtaExponents& r, Int T);

/// Index of Gamma_0(N) in SL_2(Z).
Int gamma0_index(Int N);
/// floor(k [SL_2(Z) : Gamma_0(N)] / 12).
Int sturm_bound(int k, Int N);

}  // namespace eisproj
