#include "eisproj/cusps.hpp"

#include <numeric>
#include <stdexcept>

namespace eisproj {

Cusp make_cusp(Int a, Int c) {
  if (a == 0 && c == 0) throw std::invalid_argument("0/0 is not a cusp");
  const Int g = std::gcd(a, c);
  a /= g;
  c /= g;
  if (c < 0 || (c == 0 && a < 0)) {
    a = -a;
    c = -c;
  }
  return {a, c};
}

std::string to_string(const Cusp& x) { return std::to_string(x.a) + "/" + std::to_string(x.c); }

std::vector<Cusp> cusp_representatives(Int N) {
  if (N < 1) throw std::invalid_argument("cusp_representatives: N must be positive");
  std::vector<Cusp> out;
  for (Int c : divisors(N)) {
    const Int g = std::gcd(c, N / c);
    for (Int r = 0; r < g; ++r) {
      if (std::gcd(r, g) != 1) continue;
      Int a = r == 0 ? g : r;
      while (std::gcd(a, c) != 1) a += g;
      out.push_back({a, c});
    }
  }
  return out;
}

Int cusp_count(Int N) {
  Int total = 0;
  for (Int c : divisors(N)) total += euler_phi(std::gcd(c, N / c));
  return total;
}

bool cusps_equivalent(const Cusp& x0, const Cusp& y0, Int N) {
  const Cusp x = make_cusp(x0.a, x0.c), y = make_cusp(y0.a, y0.c);
  const Int g = std::gcd(x.c, N);
  if (g != std::gcd(y.c, N)) return false;
  for (Int s = 1; s <= N; ++s) {
    if (std::gcd(s, N) != 1) continue;
    const Int sinv = inverse_mod(s, N);
    for (Int sign : {1, -1})
      if (mod(sign * y.c - s * x.c, N) == 0 && mod(sign * y.a - sinv * x.a, g) == 0) return true;
  }
  return false;
}

}  // namespace eisproj
