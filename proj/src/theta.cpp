#include "eisproj/theta.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace eisproj {

namespace {

// Leading principal minors of B by fraction-free elimination (no pivoting, so
// the k-th pivot is the k-th leading minor). Stops at the first non-positive one.
std::vector<Integer> leading_minors(const IntMatrix& B) {
  const std::size_t n = B.size();
  std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = B[i][j];
  std::vector<Integer> minors;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(M[k][k]);
    if (M[k][k] <= 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return minors;
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& B) {
  const std::size_t n = B.size();
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = B[i][j];
    M[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (sgn(M[piv][c]) == 0) ++piv;
    std::swap(M[piv], M[c]);
    const Rational inv = Rational(1) / M[c][c];
    for (auto& x : M[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(M[r][c]) == 0) continue;
      const Rational f = M[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) M[r][k] -= f * M[c][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = M[i][n + j];
  return out;
}

// Discriminant of Q(sqrt(D)) for nonzero D.
Int fundamental_part(Int D) {
  const auto [m, s] = square_decomposition(D);
  (void)m;
  return mod(s, 4) == 1 ? s : 4 * s;
}

std::vector<Integer> block_theta(const QuadraticForm& F, Int T) {
  const std::size_t n = F.dim();
  const IntMatrix& B = F.gram();
  std::vector<Integer> out(static_cast<std::size_t>(T + 1));
  // F(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2, in floating point;
  // used only for enumeration bounds, every candidate is checked exactly.
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = B[i][j] / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<Int> x(n, 0);
  const double slack = 1e-7 * (static_cast<double>(T) + 1);
  std::function<void(std::size_t, double)> rec = [&](std::size_t level, double remaining) {
    const std::size_t i = level - 1;
    double center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<double>(x[j]);
    const double r = std::sqrt(std::max(0.0, remaining + slack) / q[i][i]);
    const auto lo = static_cast<Int>(std::ceil(center - r - 1e-9));
    const auto hi = static_cast<Int>(std::floor(center + r + 1e-9));
    for (Int v = lo; v <= hi; ++v) {
      x[i] = v;
      const double t = static_cast<double>(v) - center;
      const double rest = remaining - q[i][i] * t * t;
      if (rest < -slack) continue;
      if (i == 0) {
        const Int val = F.value(x);
        if (val <= T) ++out[static_cast<std::size_t>(val)];
      } else {
        rec(i, rest);
      }
    }
    x[i] = 0;
  };
  rec(n, static_cast<double>(T));
  return out;
}

// Histogram of F(x) mod q over (Z/q)^n, then sum_r h[r] zeta_q^{a r}.
CycNumber prime_power_exp_sum(const QuadraticForm& F, Int a, Int q, double cap) {
  const std::size_t n = F.dim();
  const double work = std::pow(static_cast<double>(q), static_cast<double>(n));
  if (work > cap) {
    std::ostringstream os;
    os << "exponential sum modulo " << q << " in dimension " << n << " needs " << work
       << " lattice points, above the cap of " << cap;
    throw CapacityError(os.str());
  }
  const IntMatrix& B = F.gram();
  std::vector<Int> hist(static_cast<std::size_t>(q), 0);
  std::vector<Int> x(n, 0);
  while (true) {
    Int v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      v += (B[i][i] / 2) * x[i] % q * x[i];
      for (std::size_t j = i + 1; j < n; ++j) v += B[i][j] * x[i] % q * x[j];
      v %= q;
    }
    ++hist[static_cast<std::size_t>(mod(v, q))];
    std::size_t i = 0;
    while (i < n && ++x[i] == q) x[i++] = 0;
    if (i == n) break;
  }
  CycAccumulator acc(q);
  for (Int r = 0; r < q; ++r)
    if (hist[static_cast<std::size_t>(r)] != 0) acc.add_root(a * r, static_cast<long>(hist[static_cast<std::size_t>(r)]));
  return acc.result();
}

CycNumber block_exp_sum(const QuadraticForm& F, Int a, Int c, double cap) {
  const auto alphas = F.diagonal_coefficients();
  if (!alphas.empty()) return diagonal_gauss_sum(alphas, a, c);
  CycNumber out(1L);
  for (auto [p, e] : factorize(c)) {
    const Int q = ipow(p, e);
    const Int u = inverse_mod(c / q, q);
    out *= prime_power_exp_sum(F, mod(a * u, q), q, cap);
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace

QuadraticForm::QuadraticForm(IntMatrix gram) : B_(std::move(gram)) {
  const std::size_t n = B_.size();
  if (n == 0) throw std::invalid_argument("quadratic form: empty Gram matrix");
  for (const auto& row : B_)
    if (row.size() != n) throw std::invalid_argument("quadratic form: Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (mod(B_[i][i], 2) != 0) throw std::invalid_argument("quadratic form: Gram matrix diagonal must be even");
    for (std::size_t j = 0; j < n; ++j)
      if (B_[i][j] != B_[j][i]) throw std::invalid_argument("quadratic form: Gram matrix is not symmetric");
  }
  const auto minors = leading_minors(B_);
  if (minors.size() != n || minors.back() <= 0)
    throw std::invalid_argument("quadratic form is not positive definite");
  // Connected components of the graph with edges B_ij != 0.
  std::vector<int> comp(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(blocks_.size());
    blocks_.push_back({});
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      blocks_.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (B_[i][j] != 0 && comp[j] < 0) {
          comp[j] = id;
          stack.push_back(j);
        }
    }
    std::sort(blocks_.back().begin(), blocks_.back().end());
  }
}

QuadraticForm QuadraticForm::diagonal(const std::vector<Int>& alphas) {
  IntMatrix B(alphas.size(), std::vector<Int>(alphas.size(), 0));
  for (std::size_t i = 0; i < alphas.size(); ++i) B[i][i] = 2 * alphas[i];
  return QuadraticForm(std::move(B));
}

QuadraticForm QuadraticForm::parse_gram(const std::string& text) {
  std::istringstream is(text);
  long long n = 0;
  if (!(is >> n) || n < 1) throw std::invalid_argument("Gram file: first entry must be the dimension");
  IntMatrix B(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
  for (auto& row : B)
    for (auto& v : row) {
      long long t = 0;
      if (!(is >> t)) throw std::invalid_argument("Gram file: expected " + std::to_string(n * n) + " matrix entries");
      v = t;
    }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("Gram file: unexpected trailing data '" + extra + "'");
  return QuadraticForm(std::move(B));
}

QuadraticForm QuadraticForm::parse_diag(const std::string& text) {
  std::string body = text;
  if (body.rfind("diag:", 0) == 0) body = body.substr(5);
  std::vector<Int> alphas;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const Int v = std::stoll(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size() || v < 1) throw std::invalid_argument("");
      alphas.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("diagonal form: '" + item + "' is not a positive integer");
    }
  }
  if (alphas.empty()) throw std::invalid_argument("diagonal form is empty");
  return diagonal(alphas);
}

Integer QuadraticForm::det() const { return leading_minors(B_).back(); }

Int QuadraticForm::value(const std::vector<Int>& x) const {
  Int v = 0;
  const std::size_t n = B_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    v += (B_[i][i] / 2) * x[i] * x[i];
    for (std::size_t j = i + 1; j < n; ++j) v += B_[i][j] * x[i] * x[j];
  }
  return v;
}

std::vector<Int> QuadraticForm::diagonal_coefficients() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < B_.size(); ++i) {
    for (std::size_t j = 0; j < B_.size(); ++j)
      if (i != j && B_[i][j] != 0) return {};
    out.push_back(B_[i][i] / 2);
  }
  return out;
}

QuadraticForm QuadraticForm::block(std::size_t b) const {
  const auto& idx = blocks_.at(b);
  IntMatrix B(idx.size(), std::vector<Int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) B[i][j] = B_[idx[i]][idx[j]];
  return QuadraticForm(std::move(B));
}

LevelCharacter level_character(const QuadraticForm& F) {
  if (F.dim() % 2 != 0) throw std::invalid_argument("quadratic form must have even dimension");
  const Integer det = F.det();
  if (!det.fits_slong_p()) throw std::overflow_error("determinant too large");
  const Int D = det.get_si();
  const auto inv = rational_inverse(F.gram());
  Int level = 0;
  for (Int N : divisors(2 * D)) {
    bool ok = true;
    for (std::size_t i = 0; i < F.dim() && ok; ++i)
      for (std::size_t j = 0; j < F.dim() && ok; ++j) {
        const Rational v = inv[i][j] * N;
        if (v.get_den() != 1 || (i == j && v.get_num() % 2 != 0)) ok = false;
      }
    if (ok) {
      level = N;
      break;
    }
  }
  const int k = static_cast<int>(F.dim() / 2);
  return {level, k, DirichletCharacter::kronecker(fundamental_part(k % 2 == 0 ? D : -D))};
}

std::vector<Integer> theta_coefficients(const QuadraticForm& F, Int T) {
  std::vector<Integer> out(static_cast<std::size_t>(T + 1));
  out[0] = 1;
  for (std::size_t b = 0; b < F.blocks().size(); ++b) {
    const auto t = block_theta(F.block(b), T);
    std::vector<Integer> next(out.size());
    for (Int i = 0; i <= T; ++i) {
      if (out[static_cast<std::size_t>(i)] == 0) continue;
      for (Int j = 0; i + j <= T; ++j)
        if (t[static_cast<std::size_t>(j)] != 0)
          next[static_cast<std::size_t>(i + j)] += out[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
    }
    out = std::move(next);
  }
  return out;
}

QExpansion theta_qexp(const QuadraticForm& F, Int T) {
  const auto c = theta_coefficients(F, T);
  QExpansion out(T);
  for (Int i = 0; i <= T; ++i) out[i] = CycNumber(Rational(c[static_cast<std::size_t>(i)]));
  return out;
}

CycNumber quadratic_gauss_g(Int alpha, Int beta) {
  if (std::gcd(alpha, beta) != 1) throw std::invalid_argument("quadratic_gauss_g: gcd(alpha, beta) must be 1");
  const CycNumber root = sqrt_rational(Rational(beta));
  const CycNumber i = root_of_unity(4, 1);
  switch (mod(beta, 4)) {
    case 2: return CycNumber();
    case 1: return CycNumber(static_cast<long>(kronecker(alpha, beta))) * root;
    case 3: return i * CycNumber(static_cast<long>(kronecker(alpha, beta))) * root;
    default: {
      const CycNumber sym(static_cast<long>(kronecker(beta, alpha)));
      return (mod(alpha, 4) == 1 ? CycNumber(1L) + i : CycNumber(1L) - i) * sym * root;
    }
  }
}

CycNumber diagonal_gauss_sum(const std::vector<Int>& alphas, Int a, Int c) {
  if (c < 1 || std::gcd(a, c) != 1) throw std::invalid_argument("diagonal_gauss_sum: need c >= 1, gcd(a, c) = 1");
  CycNumber out(1L);
  for (Int alpha : alphas) {
    const Int t = alpha * a;
    const Int g = std::gcd(t, c);
    out *= CycNumber(static_cast<long>(g)) * quadratic_gauss_g(t / g, c / g);
    if (out.is_zero()) break;
  }
  return out;
}

CycNumber exp_sum(const QuadraticForm& F, Int a, Int c, double cap) {
  if (c < 1 || std::gcd(a, c) != 1) throw std::invalid_argument("exp_sum: need c >= 1, gcd(a, c) = 1");
  CycNumber out(1L);
  for (std::size_t b = 0; b < F.blocks().size(); ++b) {
    out *= block_exp_sum(F.block(b), a, c, cap);
    if (out.is_zero()) break;
  }
  return out;
}

CycNumber theta_cusp_constant(const QuadraticForm& F, Int a, Int c, double cap) {
  if (F.dim() % 2 != 0) throw std::invalid_argument("quadratic form must have even dimension");
  const auto k = static_cast<Int>(F.dim() / 2);
  const CycNumber s = exp_sum(F, a, c, cap);
  if (s.is_zero()) return s;
  Integer ck;
  mpz_ui_pow_ui(ck.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(k));
  return root_of_unity(4, -k) * CycNumber(Rational(Integer(1), ck)) * sqrt_rational(Rational(Integer(1), F.det())) * s;
}

}  // namespace eisproj
