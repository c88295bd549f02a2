#include "eisproj/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eisproj {

Factorization factorize(Int n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive, got " + std::to_string(n));
  Factorization out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> divs{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

int mobius(Int n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Int euler_phi(Int n) {
  Int phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int vp(Int p, Int n) {
  if (n == 0) throw std::domain_error("vp: valuation of 0 is undefined");
  if (p < 2) throw std::domain_error("vp: p must be a prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_squarefree(Int n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n < 0 ? -n : n))
    if (e > 1) return false;
  return true;
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int inverse_mod(Int a, Int m) {
  if (m == 1) return 0;
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
  return mod(old_s, m);
}

Int ipow(Int base, int exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  Int out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && std::abs(out) > std::numeric_limits<Int>::max() / std::abs(base))
      throw std::overflow_error("ipow: overflow");
    out *= base;
  }
  return out;
}

namespace {

// Jacobi symbol (a | n) for odd positive n.
int jacobi(Int a, Int n) {
  a = mod(a, n);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const Int r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker(Int d, Int n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  if (d % 2 == 0 && n % 2 == 0) return 0;
  while (n % 2 == 0) {
    n /= 2;
    const Int r = mod(d, 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(d, n);
}

bool is_fundamental_discriminant(Int d) {
  if (d == 1) return true;
  if (d == 0) return false;
  if (mod(d, 4) == 1) return is_squarefree(d);
  if (mod(d, 4) != 0) return false;
  const Int m = d / 4;
  const Int r = mod(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

std::pair<Int, Int> square_decomposition(Int n) {
  if (n == 0) throw std::domain_error("square_decomposition: n must be nonzero");
  const Int sign = n < 0 ? -1 : 1;
  Int m = 1, s = 1;
  for (auto [p, e] : factorize(n * sign)) {
    m *= ipow(p, e / 2);
    if (e % 2 == 1) s *= p;
  }
  return {m, sign * s};
}

}  // namespace eisproj
