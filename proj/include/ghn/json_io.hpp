#pragma once

#include <string_view>

#include <json.hpp>

#include "ghn/filtration.hpp"
#include "ghn/sheaf.hpp"

namespace ghn::io {

using json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; plain JSON integers are accepted on
// input. Every parser throws Error(ParseError) on schema violations.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// ["c0","c1",...], index = monomial degree.
json to_json(const RationalPoly& p);
RationalPoly poly_from_json(const json& j);

json to_json(const GroupDatum& d);
/// A group-spec string or a custom datum object.
GroupDatum datum_from_json(const json& j);

json to_json(const Representation& rep);
Representation representation_from_json(const json& j, std::size_t torus_rank);

json to_json(const VarietyDescriptor& v);
VarietyDescriptor variety_from_json(const json& j);

json to_json(const CombinatorialRhoSheaf& sheaf);
CombinatorialRhoSheaf sheaf_from_json(const json& j);
CombinatorialRhoSheaf parse_sheaf(std::string_view text);

/// {"L": [...], "Q": "p/q", "A_d": "p/q"}
json to_json(const NuValue& v);
NuValue nu_from_json(const json& j);

json to_json(const Cocharacter& c);
Cocharacter cocharacter_from_json(const json& j);

/// {q, steps: [{lambda, leading_degree, blocks_after}], summand_weights,
///  jumping_points: [{weight, summands}]}
json to_json(const LexFiltration& lex);
LexFiltration lex_from_json(const json& j);

json to_json(const ValidationReport& report);

}  // namespace ghn::io
