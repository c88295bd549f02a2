#pragma once

// Positive definite integral quadratic forms F(x) = x B x^T / 2, given by the
// Gram matrix B (even diagonal). Theta series, level and character, and the
// exact constant terms of the theta series at cusps.

#include <stdexcept>
#include <string>
#include <vector>

#include "eisproj/characters.hpp"
#include "eisproj/qseries.hpp"

namespace eisproj {

/// Raised when an exponential sum would need more work than allowed.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IntMatrix = std::vector<std::vector<Int>>;

class QuadraticForm {
 public:
  /// Throws std::invalid_argument unless B is square, symmetric, has even
  /// diagonal and is positive definite.
  explicit QuadraticForm(IntMatrix gram);
  /// sum_j alphas[j] x_j^2.
  static QuadraticForm diagonal(const std::vector<Int>& alphas);
  /// Plain text: the dimension, then that many rows of B.
  static QuadraticForm parse_gram(const std::string& text);
  /// "1,1,3,3" (an optional "diag:" prefix is accepted).
  static QuadraticForm parse_diag(const std::string& text);

  std::size_t dim() const { return B_.size(); }
  const IntMatrix& gram() const { return B_; }
  Integer det() const;
  Int value(const std::vector<Int>& x) const;
  /// Diagonal entries alpha_j = B_jj / 2 when B is diagonal, else empty.
  std::vector<Int> diagonal_coefficients() const;
  /// Index sets of the orthogonal blocks (connected components of B).
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  QuadraticForm block(std::size_t i) const;

 private:
  IntMatrix B_;
  std::vector<std::vector<std::size_t>> blocks_;
};

struct LevelCharacter {
  Int level = 1;
  int k = 0;               // weight, dim / 2
  DirichletCharacter chi;  // primitive Kronecker character of (-1)^k det B
};

/// Smallest N with N B^{-1} integral with even diagonal; chi as above.
/// Throws std::invalid_argument for odd dimension.
LevelCharacter level_character(const QuadraticForm& F);

/// Representation numbers #{x : F(x) = n}, n <= T.
std::vector<Integer> theta_coefficients(const QuadraticForm& F, Int T);
QExpansion theta_qexp(const QuadraticForm& F, Int T);

/// Default number of lattice points one prime-power exponential sum may visit.
inline constexpr double kDefaultExpSumCap = 1e8;

/// sum_{x mod c} exp(2 pi i F(x) a / c), gcd(a, c) = 1.
CycNumber exp_sum(const QuadraticForm& F, Int a, Int c, double cap = kDefaultExpSumCap);

/// The same sum for sum_j alphas[j] x_j^2 from the closed-form Gauss sums.
CycNumber diagonal_gauss_sum(const std::vector<Int>& alphas, Int a, Int c);

/// g(alpha, beta) for gcd(alpha, beta) = 1: the one-variable sum
/// sum_{x mod beta} exp(2 pi i alpha x^2 / beta).
CycNumber quadratic_gauss_g(Int alpha, Int beta);

/// [0]_{a/c} theta_F = (-i/c)^k det(B)^{-1/2} exp_sum(F, a, c).
CycNumber theta_cusp_constant(const QuadraticForm& F, Int a, Int c, double cap = kDefaultExpSumCap);

}  // namespace eisproj
