#pragma once

// Dirichlet characters modulo N, stored as exponents on fixed generators of
// (Z/N)^*: for odd p^e || N a primitive root (lifted by CRT), for 4 the unit
// -1, for 2^e with e >= 3 the pair -1, 5.

#include <memory>
#include <string>
#include <vector>

#include "eisproj/cyclotomic.hpp"

namespace eisproj {

struct UnitGroup;

class DirichletCharacter {
 public:
  /// Trivial character mod 1.
  DirichletCharacter();

  static DirichletCharacter trivial(Int N);
  /// Exponents are reduced mod the generator orders; throws std::invalid_argument
  /// if the vector has the wrong length.
  static DirichletCharacter from_exponents(Int N, std::vector<Int> exponents);
  /// n -> (d|n) mod |d|; d must be 1 or a fundamental discriminant.
  static DirichletCharacter kronecker(Int d);
  /// All phi(N) characters mod N, trivial first.
  static std::vector<DirichletCharacter> enumerate(Int N);
  /// Primitive characters whose conductor is exactly f.
  static std::vector<DirichletCharacter> primitive_characters(Int f);

  Int modulus() const { return N_; }
  const std::vector<Int>& exponents() const { return exps_; }
  const std::vector<Int>& generators() const;
  const std::vector<Int>& generator_orders() const;
  /// Order of the character as an element of the character group.
  Int order() const { return order_; }

  /// chi(n) = zeta_order^t; returns t, or -1 when gcd(n, N) > 1.
  Int value_exponent(Int n) const;
  CycNumber operator()(Int n) const;

  Int conductor() const { return conductor_; }
  bool is_primitive() const { return conductor() == N_; }
  /// The primitive character inducing this one.
  DirichletCharacter primitive() const;
  /// The character mod M induced by this one; N must divide M.
  DirichletCharacter induced(Int M) const;
  DirichletCharacter conj() const;
  /// Pointwise product, on the lcm of the moduli.
  DirichletCharacter operator*(const DirichletCharacter& rhs) const;

  /// chi(-1).
  int parity() const;
  bool is_trivial() const;
  bool is_real() const { return order_ <= 2; }
  /// Same primitive character (ignores the modulus).
  bool same_primitive(const DirichletCharacter& rhs) const;

  /// "chi_D" for real primitive characters, "chi_D mod N" for real imprimitive
  /// ones, otherwise "chi[N;e1,e2,...]".
  std::string label() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.N_ == b.N_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) { return !(a == b); }
  friend bool operator<(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.N_ != b.N_ ? a.N_ < b.N_ : a.exps_ < b.exps_;
  }

 private:
  DirichletCharacter(std::shared_ptr<const UnitGroup> g, std::vector<Int> exps);
  // Character mod M whose value at generator g is exp(2 pi i * turn(g)).
  template <class F>
  static DirichletCharacter from_turns(Int M, F turn);

  std::shared_ptr<const UnitGroup> group_;
  Int N_ = 1;
  std::vector<Int> exps_;
  Int order_ = 1;
  Int conductor_ = 1;
  std::shared_ptr<const std::vector<Int>> table_;
};

/// The real primitive character chi_D as a fundamental discriminant D, or 0 if
/// the character is not real.
Int kronecker_discriminant(const DirichletCharacter& chi);

/// Parses "1", "-4", "12" (Kronecker labels) or "N:e1,e2,..." (exponents).
DirichletCharacter parse_character(const std::string& text);

/// W(psi) = sum_{a=0}^{M-1} psi(a) zeta_M^a for primitive psi mod M.
/// Throws std::invalid_argument for imprimitive input.
CycNumber gauss_sum(const DirichletCharacter& psi);

/// B_{k,chi} from sum_{a=1}^{M} chi(a) t e^{at} / (e^{Mt} - 1), with chi taken
/// mod its modulus M.
CycNumber generalized_bernoulli(int k, const DirichletCharacter& chi);

}  // namespace eisproj
