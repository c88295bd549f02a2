#include "eisproj/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisproj {

struct UnitGroup {
  Int N = 1;
  std::vector<Int> gens;
  std::vector<Int> orders;
  // dlog[n] = exponents of n on gens, empty when gcd(n, N) > 1.
  std::vector<std::vector<Int>> dlog;
};

namespace {

Int lcm_int(Int a, Int b) { return a / std::gcd(a, b) * b; }

Int mulmod(Int a, Int b, Int m) { return static_cast<Int>((static_cast<__int128>(a) * b) % m); }

Int powmod(Int b, Int e, Int m) {
  Int r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

Int primitive_root(Int p, int e) {
  const Int pe = ipow(p, e);
  const Int phi = pe / p * (p - 1);
  const auto qs = prime_divisors(phi);
  for (Int g = 2; g < pe; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (Int q : qs)
      if (powmod(g, phi / q, pe) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

// x = r mod m, x = 1 mod N/m (m, N/m coprime).
Int crt_lift(Int r, Int m, Int N) {
  const Int other = N / m;
  if (other == 1) return mod(r, N);
  // x = 1 + other * t, other * t = r - 1 mod m
  const Int t = mulmod(mod(r - 1, m), inverse_mod(other, m), m);
  return mod(1 + other * t, N);
}

std::shared_ptr<const UnitGroup> build_group(Int N) {
  auto G = std::make_shared<UnitGroup>();
  G->N = N;
  for (auto [p, e] : factorize(N)) {
    const Int pe = ipow(p, e);
    if (p == 2) {
      if (e >= 2) {
        G->gens.push_back(crt_lift(-1, pe, N));
        G->orders.push_back(2);
      }
      if (e >= 3) {
        G->gens.push_back(crt_lift(5, pe, N));
        G->orders.push_back(pe / 4);
      }
    } else {
      G->gens.push_back(crt_lift(primitive_root(p, e), pe, N));
      G->orders.push_back(pe / p * (p - 1));
    }
  }
  G->dlog.assign(static_cast<std::size_t>(N), {});
  const std::size_t r = G->gens.size();
  std::vector<Int> x(r, 0);
  // Walk all exponent tuples, odometer style.
  while (true) {
    Int v = 1 % N;
    for (std::size_t i = 0; i < r; ++i) v = mulmod(v, powmod(G->gens[i], x[i], N), N);
    G->dlog[static_cast<std::size_t>(v)] = x;
    std::size_t i = 0;
    while (i < r && ++x[i] == G->orders[i]) x[i++] = 0;
    if (i == r) break;
  }
  if (N == 1) G->dlog[0] = {};
  return G;
}

std::shared_ptr<const UnitGroup> unit_group(Int N) {
  if (N < 1) throw std::invalid_argument("character modulus must be positive");
  static std::mutex mu;
  static std::map<Int, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto G = build_group(N);
  cache.emplace(N, G);
  return G;
}

bool is_unit(const UnitGroup& G, Int n) { return std::gcd(mod(n, G.N), G.N) == 1; }

}  // namespace

DirichletCharacter::DirichletCharacter() : DirichletCharacter(unit_group(1), {}) {}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> g, std::vector<Int> exps)
    : group_(std::move(g)), N_(group_->N), exps_(std::move(exps)) {
  if (exps_.size() != group_->gens.size())
    throw std::invalid_argument("character exponent vector has wrong length for modulus " +
                                std::to_string(N_));
  order_ = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] = mod(exps_[i], group_->orders[i]);
    order_ = lcm_int(order_, group_->orders[i] / std::gcd(exps_[i], group_->orders[i]));
  }
  auto table = std::make_shared<std::vector<Int>>(static_cast<std::size_t>(N_), -1);
  for (Int n = 0; n < N_; ++n) {
    if (!is_unit(*group_, n)) continue;
    const auto& x = group_->dlog[static_cast<std::size_t>(n)];
    Int t = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      t += exps_[i] * order_ / group_->orders[i] * x[i];
    (*table)[static_cast<std::size_t>(n)] = mod(t, order_);
  }
  table_ = std::move(table);
  conductor_ = N_;
  for (Int f : divisors(N_)) {
    bool trivial_on_kernel = true;
    for (Int n = 1; n < N_ && trivial_on_kernel; n += f)
      if (std::gcd(n, N_) == 1 && value_exponent(n) != 0) trivial_on_kernel = false;
    if (trivial_on_kernel) {
      conductor_ = f;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::trivial(Int N) {
  auto G = unit_group(N);
  return DirichletCharacter(G, std::vector<Int>(G->gens.size(), 0));
}

DirichletCharacter DirichletCharacter::from_exponents(Int N, std::vector<Int> exponents) {
  return DirichletCharacter(unit_group(N), std::move(exponents));
}

template <class F>
DirichletCharacter DirichletCharacter::from_turns(Int M, F turn) {
  auto G = unit_group(M);
  std::vector<Int> exps;
  for (std::size_t i = 0; i < G->gens.size(); ++i) {
    const Rational e = turn(G->gens[i]) * G->orders[i];
    if (e.get_den() != 1) throw std::logic_error("character value is not a root of the generator order");
    exps.push_back(e.get_num().get_si());
  }
  return DirichletCharacter(G, std::move(exps));
}

DirichletCharacter DirichletCharacter::kronecker(Int d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument(std::to_string(d) + " is not a fundamental discriminant");
  const Int M = d < 0 ? -d : d;
  return from_turns(M, [d](Int g) { return eisproj::kronecker(d, g) == 1 ? Rational(0) : frac(1, 2); });
}

std::vector<DirichletCharacter> DirichletCharacter::enumerate(Int N) {
  auto G = unit_group(N);
  const std::size_t r = G->gens.size();
  std::vector<DirichletCharacter> out;
  std::vector<Int> x(r, 0);
  while (true) {
    out.push_back(DirichletCharacter(G, x));
    std::size_t i = 0;
    while (i < r && ++x[i] == G->orders[i]) x[i++] = 0;
    if (i == r) break;
  }
  return out;
}

std::vector<DirichletCharacter> DirichletCharacter::primitive_characters(Int f) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate(f))
    if (chi.is_primitive()) out.push_back(std::move(chi));
  return out;
}

const std::vector<Int>& DirichletCharacter::generators() const { return group_->gens; }
const std::vector<Int>& DirichletCharacter::generator_orders() const { return group_->orders; }

Int DirichletCharacter::value_exponent(Int n) const { return (*table_)[static_cast<std::size_t>(mod(n, N_))]; }

CycNumber DirichletCharacter::operator()(Int n) const {
  const Int t = value_exponent(n);
  if (t < 0) return CycNumber();
  return root_of_unity(order_, t);
}

DirichletCharacter DirichletCharacter::primitive() const {
  const Int f = conductor();
  if (f == N_) return *this;
  return from_turns(f, [this, f](Int g) {
    Int n = g;
    while (std::gcd(n, N_) != 1) n += f;
    return frac(value_exponent(n), order_);
  });
}

DirichletCharacter DirichletCharacter::induced(Int M) const {
  if (M % N_ != 0)
    throw std::invalid_argument("cannot induce a character mod " + std::to_string(N_) + " to modulus " +
                                std::to_string(M));
  if (M == N_) return *this;
  return from_turns(M, [this](Int g) { return frac(value_exponent(g), order_); });
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<Int> e(exps_);
  for (auto& x : e) x = -x;
  return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& rhs) const {
  const Int M = lcm_int(N_, rhs.N_);
  const DirichletCharacter a = induced(M), b = rhs.induced(M);
  std::vector<Int> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
  return DirichletCharacter(a.group_, std::move(e));
}

int DirichletCharacter::parity() const {
  const Int t = value_exponent(-1);
  return t == 0 ? 1 : -1;
}

bool DirichletCharacter::is_trivial() const { return order_ == 1; }

bool DirichletCharacter::same_primitive(const DirichletCharacter& rhs) const {
  return primitive() == rhs.primitive();
}

Int kronecker_discriminant(const DirichletCharacter& chi) {
  if (!chi.is_real()) return 0;
  const Int f = chi.conductor();
  return chi.parity() == 1 ? f : -f;
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  if (is_real()) {
    os << "chi_" << kronecker_discriminant(*this);
    if (!is_primitive()) os << " mod " << N_;
    return os.str();
  }
  os << "chi[" << N_ << ";";
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << "]";
  return os.str();
}

DirichletCharacter parse_character(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      std::size_t used = 0;
      const Int d = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return DirichletCharacter::kronecker(d);
    }
    const Int N = std::stoll(text.substr(0, colon));
    std::vector<Int> exps;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ','))
      if (!item.empty()) exps.push_back(std::stoll(item));
    return DirichletCharacter::from_exponents(N, std::move(exps));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad character '" + text + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("bad character '" + text + "': number out of range");
  }
}

CycNumber gauss_sum(const DirichletCharacter& psi) {
  if (!psi.is_primitive())
    throw std::invalid_argument("gauss_sum: character " + psi.label() + " is not primitive");
  const Int M = psi.modulus();
  const Int L = lcm_int(M, psi.order());
  CycAccumulator acc(L);
  for (Int a = 0; a < M; ++a) {
    const Int t = psi.value_exponent(a);
    if (t < 0) continue;
    acc.add_root(a * (L / M) + t * (L / psi.order()), 1L);
  }
  return acc.result();
}

CycNumber generalized_bernoulli(int k, const DirichletCharacter& chi) {
  if (k < 0) throw std::invalid_argument("generalized_bernoulli: k must be non-negative");
  const Int M = chi.modulus();
  // u(t) = (e^{Mt} - 1)/t = sum_j M^{j+1} t^j / (j+1)!, h = 1/u.
  std::vector<Rational> u(static_cast<std::size_t>(k + 1)), h(static_cast<std::size_t>(k + 1));
  {
    Rational mpow = M, fact = 1;
    for (int j = 0; j <= k; ++j) {
      fact *= (j + 1);
      u[static_cast<std::size_t>(j)] = mpow / fact;
      mpow *= M;
    }
  }
  h[0] = Rational(1) / u[0];
  for (int n = 1; n <= k; ++n) {
    Rational s = 0;
    for (int j = 1; j <= n; ++j) s += u[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(n - j)];
    h[static_cast<std::size_t>(n)] = -s / u[0];
  }
  Rational kfact = 1;
  for (int j = 2; j <= k; ++j) kfact *= j;
  CycAccumulator acc(chi.order());
  for (Int a = 1; a <= M; ++a) {
    const Int t = chi.value_exponent(a);
    if (t < 0) continue;
    // [t^k] e^{at} h(t)
    Rational c = 0, apow = 1, jf = 1;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) {
        apow *= a;
        jf *= j;
      }
      c += apow / jf * h[static_cast<std::size_t>(k - j)];
    }
    acc.add_root(t, c * kfact);
  }
  return acc.result();
}

}  // namespace eisproj
