#include "eisproj/etacusp.hpp"

#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisproj {

namespace {

Int sgn_int(Int x) { return (x > 0) - (x < 0); }
Int abs_int(Int x) { return x < 0 ? -x : x; }
bool odd(Int x) { return mod(x, 2) == 1; }

// Exact quotient for values known to be divisible.
Int exact_div(Int a, Int b) {
  if (a % b != 0) throw std::logic_error("exact_div: not divisible");
  return a / b;
}

// [x, y, u, v] with eta(m g z) = eta([[x, y], [u, v]] (m z')) style
// decomposition for the column (d, c) and divisor m.
std::array<Int, 4> l_constr(Int m, Int d, Int c) {
  const Int g = std::gcd(c, m);
  const Int x1 = m * d / g;
  const Int u1 = -c / g;
  const Int bound = abs_int(x1 * u1);
  for (Int i1 = -bound; i1 < bound; ++i1)
    if (std::gcd(i1, x1) == 1 && (1 + i1 * u1) % x1 == 0) return {x1, i1, u1, exact_div(1 + i1 * u1, x1)};
  throw std::logic_error("L_constr: no solution for m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                         ", c=" + std::to_string(c));
}

// [a, b, c, d] in SL_2(Z) with the given bottom row.
std::array<Int, 4> a_find(Int d, Int c) {
  for (Int b = 0; b < abs_int(d * c); ++b)
    if (std::gcd(b, d) == 1 && (1 + b * c) % d == 0) return {exact_div(1 + b * c, d), b, c, d};
  throw std::logic_error("A_find: no solution for d=" + std::to_string(d) + ", c=" + std::to_string(c));
}

struct DivisorFactor {
  int v1;
  int v2;
  Rational phase;      // v3 + OP4, in turns
  Rational sqrt_base;  // gcd(c, m) / m, enters as a square root
};

DivisorFactor f_c_of_eta(Int m, Int d, Int c) {
  const auto [a, b, cc, dd] = a_find(d, c);
  (void)cc;
  (void)dd;
  const auto [x, y, u, v] = l_constr(m, d, c);
  const Int vv = -m * b * v - y * a;
  const Int g = std::gcd(c, m);
  return {eta_v1(x, y, u, v), eta_v2(x, y, u, v), eta_v3(x, y, u, v) + frac(vv * g, 24 * m),
          frac(g, m)};
}

}  // namespace

int eta_v1(Int, Int, Int c, Int d) { return odd(c) ? kronecker(d, abs_int(c)) : kronecker(c, abs_int(d)); }

int eta_v2(Int, Int, Int c, Int d) {
  if (odd(c)) return 1;
  const Int e = (sgn_int(c) - 1) * (sgn_int(d) - 1) / 4;
  return e % 2 == 0 ? 1 : -1;
}

Rational eta_v3(Int a, Int b, Int c, Int d) {
  if (odd(c)) return frac((a + d) * c - b * d * (c * c - 1) - 3 * c, 24);
  return frac((a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d, 24);
}

EtaQuotient parse_eta(Int level, const std::string& text) {
  if (level < 1) throw std::invalid_argument("eta quotient: level must be positive");
  EtaQuotient f{level, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("eta item '" + item + "' is not of the form d:r");
    Int d = 0, r = 0;
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string ds = item.substr(0, colon), rs = item.substr(colon + 1);
      d = std::stoll(ds, &u1);
      r = std::stoll(rs, &u2);
      if (u1 != ds.size() || u2 != rs.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("eta item '" + item + "' is not of the form d:r");
    }
    if (d < 1 || level % d != 0)
      throw std::invalid_argument("eta quotient: " + std::to_string(d) + " does not divide the level " +
                                  std::to_string(level));
    if (r != 0) f.r[d] += r;
  }
  for (auto it = f.r.begin(); it != f.r.end();) it = it->second == 0 ? f.r.erase(it) : std::next(it);
  if (f.r.empty()) throw std::invalid_argument("eta quotient: all exponents are zero");
  return f;
}

std::string to_string(const EtaQuotient& f) {
  std::ostringstream os;
  bool first = true;
  for (auto [d, r] : f.r) {
    os << (first ? "" : ",") << d << ":" << r;
    first = false;
  }
  return os.str();
}

WeightCharacter weight_character(const EtaQuotient& f) {
  Int total = 0, s1 = 0, s2 = 0;
  for (auto [d, r] : f.r) {
    if (d < 1 || f.level % d != 0)
      throw std::invalid_argument("eta quotient: " + std::to_string(d) + " does not divide the level");
    total += r;
    s1 += d * r;
    s2 += (f.level / d) * r;
  }
  if (total % 2 != 0) throw std::invalid_argument("eta quotient has half-integral weight (sum r_d is odd)");
  if (s1 % 24 != 0)
    throw std::invalid_argument("eta quotient: sum d*r_d = " + std::to_string(s1) + " is not divisible by 24");
  if (s2 % 24 != 0)
    throw std::invalid_argument("eta quotient: sum (N/d)*r_d = " + std::to_string(s2) +
                                " is not divisible by 24");
  const int k = static_cast<int>(total / 2);
  // Squarefree part of (-1)^k prod d^{r_d}, tracked by prime-exponent parity.
  std::map<Int, Int> parity;
  for (auto [d, r] : f.r)
    for (auto [p, e] : factorize(d)) parity[p] += e * r;
  Int s = (k % 2 == 0) ? 1 : -1;
  for (auto [p, e] : parity)
    if (e % 2 != 0) s *= p;
  const Int D = mod(s, 4) == 1 ? s : 4 * s;
  return {k, DirichletCharacter::kronecker(D)};
}

Rational vanishing_order(const EtaQuotient& f, Int c) {
  Rational s = 0;
  for (auto [d, r] : f.r) {
    const Int g = std::gcd(c, d);
    s += frac(g * g * r, 24 * d);
  }
  return s;
}

CycNumber eta_constant_term(const EtaQuotient& f, const Cusp& x0) {
  const WeightCharacter wc = weight_character(f);
  Cusp x = make_cusp(x0.a, x0.c);
  if (x.c == 0) x = {1, f.level};  // i*infinity is equivalent to 1/N
  if (x.a == 0) x.a = x.c;          // 0/1 -> 1/1, a translate
  const Rational ord = vanishing_order(f, x.c);
  if (sgn(ord) > 0) return CycNumber();
  if (sgn(ord) < 0)
    throw std::domain_error("eta quotient " + to_string(f) + " has a pole at the cusp " + to_string(x));
  const Int d = -x.a, c = x.c;
  int sign = wc.k % 2 == 0 ? 1 : -1;
  Rational phase = 0, base = 1;
  for (auto [m, r] : f.r) {
    const DivisorFactor o = f_c_of_eta(m, d, c);
    if ((o.v1 * o.v2 == -1) && (r % 2 != 0)) sign = -sign;
    phase += o.phase * r;
    const Rational b = r > 0 ? o.sqrt_base : Rational(1) / o.sqrt_base;
    for (Int i = 0; i < abs_int(r); ++i) base *= b;
  }
  return CycNumber(static_cast<long>(sign)) * sqrt_rational(base) * exp_2pi_i(phase);
}

}  // namespace eisproj
