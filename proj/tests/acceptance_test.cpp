// Acceptance criteria 1-9: one PASS/FAIL line each; nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "eisproj/fixtures.hpp"

using namespace eisproj;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "orthogonality of R and S, N <= 60, k = 2..7", {"orthogonality"}, 120},
      {2, "constant terms of f_k at the cusps of Gamma_0(24), k = 1..5", {"appendix-table"}, 10},
      {3, "g_1 equals its projection, n <= 50", {"g1"}, 30},
      {4, "sums of 4 and 8 squares against lattice counts, n <= 100", {"squares"}, 60},
      {5, "tau(n) = sigma_11(n) mod 691 through theta(F_6)", {"tau691"}, 120},
      {6, "closed forms for F(a, b; p), p = 3, 5, 7, n <= 40", {"mixed-sums"}, 180},
      {7, "point counts of y^2 + y = x^3 - 7 and the level 27 newform", {"curve27"}, 60},
      {8, "idempotence of the projection, N <= 24, k = 2..5", {"idempotence"}, 120},
      {9, "E_{h_1} coefficients and the N_27 construction", {"h1"}, 30},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    std::size_t checks = 0;
    try {
      for (const auto& s : c.suites)
        for (const auto& r : run_suite(s)) {
          ++checks;
          if (!r.passed && ok) {
            ok = false;
            detail = r.name + ": expected " + r.expected + ", actual " + r.actual;
          }
        }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s  criterion %d: %s  (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, checks, secs);
    if (!ok) {
      std::printf("      %s\n", detail.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
