#pragma once

// Worked examples and closed-form identities used by the verify suites: the
// eta quotients f_k, g_k, h_k, the level 2 forms F_k, the forms
// F(a, b; p) = x_1^2 + ... + x_a^2 + p (y_1^2 + ... + y_b^2), the curve
// y^2 + y = x^3 - 7 of conductor 27, and Ramanujan's tau modulo 691.

#include <string>
#include <vector>

#include "eisproj/etacusp.hpp"
#include "eisproj/projection.hpp"
#include "eisproj/theta.hpp"

namespace eisproj {

CuspOracle eta_oracle(const EtaQuotient& f);
CuspOracle theta_oracle(const QuadraticForm& F, double cap = kDefaultExpSumCap);
CuspOracle eisenstein_oracle(int k, const EisKey& key);
CuspOracle Ld_oracle(Int d);

/// Projection of an eta quotient / theta series with the weight, level and
/// character read off the object itself.
EisCombination project_eta(const EtaQuotient& f);
EisCombination project_theta(const QuadraticForm& F, double cap = kDefaultExpSumCap);

/// eta(2z)eta(3z)eta(8z)eta(12z) / (eta(z)eta(24z)), all to the power 2k+1.
EtaQuotient f_eta(int k);
/// eta^{6k-5}(3z) eta^{6k-4}(4z) / (eta^{2k-3}(z) eta^{2k-2}(2z) eta^{2k-4}(6z) eta^{2k}(12z)).
EtaQuotient g_eta(int k);
/// eta^{6k-4}(9z) eta^3(27z) / eta^{2k-1}(3z).
EtaQuotient h_eta(int k);

/// [0]_{1/1} f_k = -i^{2k+1} sqrt(6) / (3^{k+1} 2^{3k+2}).
CycNumber f_constant_at_one(int k);

/// Closed forms of E_{f_k} and E_{g_k} through q^T.
QExpansion f_eisenstein_closed_form(int k, Int T);
QExpansion g_eisenstein_closed_form(int k, Int T);

/// Coefficients of sigma_{2k-1}(n/d), d = 1, 9, and sigma_{2k-1}(chi_-3, chi_-3; n)
/// in E_{h_k}, from the closed form (the d = 3 slot is not covered).
struct HCoefficients {
  CycNumber a1, a9, b1;
};
HCoefficients h_closed_form_coefficients(int k);

/// Coefficient of sigma_{k-1}(eps, psi; n/d) in the q-expansion of a combination:
/// a_f(eps, psi, d) times the normalization of E_k(eps, psi; z).
CycNumber sigma_coefficient(const EisCombination& comb, const EisKey& key);

/// Gram matrix of F_k: k orthogonal copies of [[2,0,1,1],[0,2,1,1],[1,1,2,1],[1,1,1,2]].
IntMatrix F_k_gram(int k);
/// [n] E_{theta_{F_k}} = -4k / (((-2)^k + 1) B_{2k}) (sigma_{2k-1}(n) + (-2)^k sigma_{2k-1}(n/2)).
QExpansion F_k_eisenstein_closed_form(int k, Int T);

/// Sum of 2k squares: the closed forms for k even and k odd.
QExpansion squares_eisenstein_closed_form(int k, Int T);
/// #{x in Z^m : x_1^2 + ... + x_m^2 = n} by direct convolution.
std::vector<Integer> brute_force_squares(int m, Int T);

/// F(a, b; p); a, b odd, a + b >= 4, p an odd prime.
QuadraticForm mixed_form(int a, int b, Int p);
/// Closed form for E_{theta_F(a, b; p)}; throws std::invalid_argument outside
/// the stated range.
QExpansion mixed_closed_form(int a, int b, Int p, Int T);

/// 1 + #{(x, y) in F_p^2 : y^2 + y = x^3 - 7}; p prime, p != 3.
Int count_points_E27A(Int p);
/// The weight 2 newform of level 27: h_1 - E_{h_1} scaled to have leading coefficient 1.
QExpansion newform_27(Int T);
/// -9 eta^2(9z) eta^3(27z)/eta(3z) + sum (sigma(n)/2 - 2 sigma(n/3) + 3 sigma(n/9)/2
/// + sigma(chi_-3, chi_-3; n)/2) q^n.
QExpansion newform_27_display(Int T);

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double seconds = 0;
};

/// Names of the verify suites, in acceptance order.
std::vector<std::string> suite_names();
/// Runs one suite; throws std::invalid_argument for an unknown name.
std::vector<FixtureResult> run_suite(const std::string& name);

}  // namespace eisproj
