#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycNumber lives in the smallest Q(zeta_n) that contains it (n is never
// 2 mod 4, since Q(zeta_2m) = Q(zeta_m) for odd m). Internally the coefficients
// are stored on the tensor basis
//
//     prod_{p^e || n} zeta_{p^e}^{j_p},   0 <= j_p < phi(p^e),
//
// which is a Q-basis of Q(zeta_n) and makes the subfield test a zero-pattern
// check. power_basis() gives the remainder modulo Phi_n in 1, zeta_n, ...,
// zeta_n^{phi(n)-1}; that is the form used on the wire.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "eisproj/numtheory.hpp"

namespace eisproj {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms (mpq_class(n, d) alone does not reduce).
inline Rational frac(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}
inline Rational frac(long n, long d) { return frac(Integer(n), Integer(d)); }

class CycNumber {
 public:
  CycNumber();
  CycNumber(long v);  // NOLINT(google-explicit-constructor)
  CycNumber(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// zeta_n^j with zeta_n = exp(2 pi i / n).
  static CycNumber root_of_unity(Int n, Int j);

  /// sum_i coeffs[i] * zeta_n^i.
  static CycNumber from_power_basis(Int n, const std::vector<Rational>& coeffs);

  /// Smallest n (not 2 mod 4) with this element in Q(zeta_n).
  Int order() const { return order_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  /// Throws std::domain_error unless is_rational().
  const Rational& rational_value() const;

  /// Remainder modulo Phi_n in the power basis, length phi(order()).
  std::vector<Rational> power_basis() const;
  const std::vector<Rational>& tensor_coefficients() const { return coeffs_; }

  CycNumber conj() const;
  /// The automorphism zeta_n -> zeta_n^t; gcd(t, order()) must be 1.
  CycNumber galois(Int t) const;
  /// Throws std::domain_error on zero.
  CycNumber inverse() const;
  CycNumber pow(long e) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Value under zeta_n -> exp(2 pi i / n), in double precision.
  std::complex<double> to_complex() const;

  /// Real and imaginary parts as fixed-point decimal strings with `digits`
  /// digits after the point; absolute error below 10^-digits.
  std::pair<std::string, std::string> to_decimal(int digits) const;

  /// Human-readable power-basis form, e.g. "1/2 + 3*z12^2" (z12 = zeta_12).
  std::string str() const;

 private:
  friend class CycAccumulator;
  CycNumber(Int order, std::vector<Rational> coeffs);  // canonicalizes

  Int order_ = 1;
  std::vector<Rational> coeffs_;
};

CycNumber root_of_unity(Int n, Int j);

/// Positive square root of a squarefree s >= 1, built from quadratic Gauss
/// sums (sqrt p for p = 1 mod 4, -i times the sum for p = 3 mod 4) and
/// sqrt 2 = zeta_8 + zeta_8^-1. Throws std::domain_error if s is not squarefree.
CycNumber sqrt_cyclotomic(Int s);

/// Positive square root of a positive rational, via its squarefree kernel.
CycNumber sqrt_rational(const Rational& q);

/// Value of a rational x as exp(2 pi i x).
CycNumber exp_2pi_i(const Rational& x);

/// Accumulates sums of the form sum_j c_j * zeta_n^j without canonicalizing
/// after every term.
class CycAccumulator {
 public:
  explicit CycAccumulator(Int n);
  void add_root(Int j, const Rational& coeff);
  void add_root(Int j, long coeff = 1);
  CycNumber result() const;

 private:
  Int user_order_;
  Int order_;
  std::vector<Int> axis_units_;
  std::vector<Int> axis_pe_;
  std::vector<Int> axis_fstride_;
  std::vector<Rational> full_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(Int n);

}  // namespace eisproj
