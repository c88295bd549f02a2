#pragma once

// JSON records for the exact values the tools print.
//
// CycNumber:      {"order": n, "coeffs": ["p/q", ...], "approx": ["re", "im"]}
//                 coeffs on 1, zeta_n, ..., zeta_n^{phi(n)-1}.
// Character:      {"modulus": N, "exponents": [...], "label": "chi_-4"}
// Cusp:           {"a": a, "c": c}
// QExpansion:     {"truncation": T, "coeffs": [CycNumber, ...]}
// EisCombination: {"weight", "level", "character", "terms": [{"eps", "psi", "d", "coeff"}],
//                  "Ld_terms": [{"d", "coeff"}]}   (Ld_terms only in weight 2, trivial character)

#include <json.hpp>

#include "eisproj/projection.hpp"

namespace eisproj {

using Json = nlohmann::json;

inline constexpr int kApproxDigits = 20;

Json to_json(const CycNumber& x);
/// Throws std::invalid_argument on a malformed record.
CycNumber cyc_from_json(const Json& j);

Json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);

Json to_json(const Cusp& x);
Cusp cusp_from_json(const Json& j);

Json to_json(const QExpansion& f);
QExpansion qexp_from_json(const Json& j);

Json to_json(const EisCombination& comb);

}  // namespace eisproj
