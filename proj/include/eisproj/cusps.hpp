#pragma once

// Cusps of Gamma_0(N).

#include <string>
#include <vector>

#include "eisproj/numtheory.hpp"

namespace eisproj {

/// The cusp a/c with gcd(a, c) = 1 and c >= 0; 1/0 is i*infinity.
struct Cusp {
  Int a = 1;
  Int c = 0;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// Reduces a/c (not both zero) to lowest terms with c >= 0.
Cusp make_cusp(Int a, Int c);

std::string to_string(const Cusp& x);

/// One cusp a/c per Gamma_0(N)-class: for each c | N (ascending), the
/// phi(gcd(c, N/c)) classes of numerators, each with the least positive a
/// coprime to c. i*infinity appears as 1/N.
std::vector<Cusp> cusp_representatives(Int N);

/// sum_{c | N} phi(gcd(c, N/c)).
Int cusp_count(Int N);

/// Gamma_0(N)-equivalence: c' = +-s c (mod N) and a' = +-s^-1 a (mod gcd(c, N))
/// for a unit s mod N, with the same sign.
bool cusps_equivalent(const Cusp& x, const Cusp& y, Int N);

}  // namespace eisproj
