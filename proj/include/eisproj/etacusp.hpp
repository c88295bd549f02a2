#pragma once

// Eta quotients prod_{d | N} eta(dz)^{r_d} as modular forms on Gamma_0(N):
// weight and character, orders at cusps, and exact constant terms at cusps
// from the eta multiplier system.

#include <string>

#include "eisproj/cusps.hpp"
#include "eisproj/qseries.hpp"

namespace eisproj {

struct EtaQuotient {
  Int level = 1;
  EtaExponents r;
};

/// Parses "1:-3,2:-2,3:7"; throws std::invalid_argument on malformed input,
/// keys not dividing the level, or an all-zero quotient.
EtaQuotient parse_eta(Int level, const std::string& text);
std::string to_string(const EtaQuotient& f);

struct WeightCharacter {
  int k = 0;
  DirichletCharacter chi;  // primitive Kronecker character
};

/// k = sum r_d / 2 and chi = chi_D for D the discriminant of the square class of
/// (-1)^k prod d^{r_d}. Throws std::invalid_argument when the weight is not an
/// integer or sum d r_d, sum (N/d) r_d are not multiples of 24.
WeightCharacter weight_character(const EtaQuotient& f);

/// sum_d gcd(c, d)^2 r_d / (24 d): positive means f vanishes at a/c, negative
/// means a pole.
Rational vanishing_order(const EtaQuotient& f, Int c);

/// [0]_{a/c} f. Throws std::domain_error if f has a pole at a/c.
CycNumber eta_constant_term(const EtaQuotient& f, const Cusp& x);

/// The three factors of the eta multiplier for [[a, b], [c, d]]: the Kronecker
/// sign, the sign for negative entries, and the phase exponent (a turn).
int eta_v1(Int a, Int b, Int c, Int d);
int eta_v2(Int a, Int b, Int c, Int d);
Rational eta_v3(Int a, Int b, Int c, Int d);

}  // namespace eisproj
