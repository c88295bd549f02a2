#include "eisproj/serialize.hpp"

#include <stdexcept>

namespace eisproj {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("JSON record lacks \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const CycNumber& x) {
  Json coeffs = Json::array();
  for (const auto& q : x.power_basis()) coeffs.push_back(q.get_str());
  const auto [re, im] = x.to_decimal(kApproxDigits);
  return {{"order", x.order()}, {"coeffs", coeffs}, {"approx", {re, im}}};
}

CycNumber cyc_from_json(const Json& j) {
  const Int n = field(j, "order").get<Int>();
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) {
    Rational q;
    if (q.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational " + c.dump());
    q.canonicalize();
    coeffs.push_back(q);
  }
  return CycNumber::from_power_basis(n, coeffs);
}

Json to_json(const DirichletCharacter& chi) {
  return {{"modulus", chi.modulus()}, {"exponents", chi.exponents()}, {"label", chi.label()}};
}

DirichletCharacter character_from_json(const Json& j) {
  return DirichletCharacter::from_exponents(field(j, "modulus").get<Int>(),
                                            field(j, "exponents").get<std::vector<Int>>());
}

Json to_json(const Cusp& x) { return {{"a", x.a}, {"c", x.c}}; }

Cusp cusp_from_json(const Json& j) { return make_cusp(field(j, "a").get<Int>(), field(j, "c").get<Int>()); }

Json to_json(const QExpansion& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return {{"truncation", f.truncation()}, {"coeffs", coeffs}};
}

QExpansion qexp_from_json(const Json& j) {
  std::vector<CycNumber> coeffs;
  for (const auto& c : field(j, "coeffs")) coeffs.push_back(cyc_from_json(c));
  if (static_cast<Int>(coeffs.size()) != field(j, "truncation").get<Int>() + 1)
    throw std::invalid_argument("q-expansion length does not match truncation");
  return QExpansion(std::move(coeffs));
}

Json to_json(const EisCombination& comb) {
  Json terms = Json::array();
  for (const auto& t : comb.terms)
    terms.push_back({{"eps", to_json(t.key.eps)}, {"psi", to_json(t.key.psi)}, {"d", t.key.d}, {"coeff", to_json(t.coeff)}});
  Json out = {{"weight", comb.k}, {"level", comb.N}, {"character", to_json(comb.chi)}, {"terms", terms}};
  if (comb.weight2_trivial) {
    Json ld = Json::array();
    for (const auto& [d, c] : comb.Ld_terms) ld.push_back({{"d", d}, {"coeff", to_json(c)}});
    out["Ld_terms"] = ld;
  }
  return out;
}

}  // namespace eisproj
