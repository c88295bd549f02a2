#include <doctest.h>

#include "eisproj/fixtures.hpp"
#include "eisproj/serialize.hpp"

using namespace eisproj;

TEST_CASE("CycNumber records") {
  const CycNumber x = CycNumber(frac(3, 4)) + root_of_unity(12, 5) - sqrt_cyclotomic(6);
  const Json j = to_json(x);
  CHECK(j["order"] == x.order());
  CHECK(j["coeffs"].size() == x.power_basis().size());
  CHECK(j["approx"].size() == 2);
  CHECK(cyc_from_json(Json::parse(j.dump())) == x);
  CHECK(to_json(CycNumber(frac(-2, 6)))["coeffs"][0] == "-1/3");
  CHECK_THROWS_AS(cyc_from_json(Json{{"order", 4}}), std::invalid_argument);
}

TEST_CASE("character, cusp and q-expansion records") {
  for (const auto& chi : DirichletCharacter::enumerate(20)) CHECK(character_from_json(to_json(chi)) == chi);
  CHECK(to_json(DirichletCharacter::kronecker(-4))["label"] == "chi_-4");
  CHECK(cusp_from_json(to_json(Cusp{5, 24})) == Cusp{5, 24});
  const QExpansion f = eisenstein_qexp(3, DirichletCharacter(), DirichletCharacter::kronecker(-3), 1, 8);
  const Json j = to_json(f);
  CHECK(j["truncation"] == 8);
  CHECK(qexp_from_json(Json::parse(j.dump())) == f);
}

TEST_CASE("combination records") {
  const auto comb = project_eta(f_eta(1));
  const Json j = to_json(comb);
  CHECK(j["weight"] == 3);
  CHECK(j["level"] == 24);
  CHECK(j["terms"].size() == 4);
  CHECK_FALSE(j.contains("Ld_terms"));
  for (std::size_t i = 0; i < comb.terms.size(); ++i) {
    CHECK(cyc_from_json(j["terms"][i]["coeff"]) == comb.terms[i].coeff);
    CHECK(character_from_json(j["terms"][i]["psi"]) == comb.terms[i].key.psi);
  }
  const Json w2 = to_json(project_theta(QuadraticForm::diagonal({1, 1, 1, 1})));
  CHECK(w2.contains("Ld_terms"));
}
