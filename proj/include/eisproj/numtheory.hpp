#pragma once

// Elementary integer functions: factorization, divisors, Moebius, Euler phi,
// p-adic valuation, modular inverses and the Kronecker symbol.
//
// Everything here works on 64-bit integers and uses trial division; inputs
// are levels, conductors and their divisors, so they stay small.

#include <cstdint>
#include <utility>
#include <vector>

namespace eisproj {

using Int = std::int64_t;

/// Prime-exponent pairs, primes strictly increasing, exponents >= 1.
using Factorization = std::vector<std::pair<Int, int>>;

Factorization factorize(Int n);

/// Ascending list of positive divisors of n (n >= 1).
std::vector<Int> divisors(Int n);

/// Distinct prime divisors of n in increasing order.
std::vector<Int> prime_divisors(Int n);

int mobius(Int n);
Int euler_phi(Int n);

/// Exponent of the prime p in n. Throws std::domain_error for n == 0.
int vp(Int p, Int n);

bool is_prime(Int n);
bool is_squarefree(Int n);

/// Least non-negative residue of a mod m (m > 0).
Int mod(Int a, Int m);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

/// Integer power with overflow check (throws std::overflow_error).
Int ipow(Int base, int exp);

/// Kronecker symbol (d | n), including the extensions at n = 0, -1 and 2.
int kronecker(Int d, Int n);

/// d == 1, or d a fundamental discriminant.
bool is_fundamental_discriminant(Int d);

/// Writes a nonzero integer as sign * m^2 * s with s squarefree and positive.
/// Returns {m, sign * s}.
std::pair<Int, Int> square_decomposition(Int n);

}  // namespace eisproj
