#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "gtutte/group.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/target_group.hpp"

namespace gtutte {

/// On-disk arrangement: ambient rank, relation columns, labelled elements,
/// and an optional default coefficient group.
struct Arrangement {
  ElementList list;
  std::optional<TargetGroup> group;
};

Arrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json arrangement_to_json(const Arrangement& a);

/// Mini-grammar for coefficient groups: `Z/k`, `S1`, `Cx` (= S^1 x R),
/// `C` (= R^2), `R`, `triv`, and `x`-separated products, e.g. "Z/2 x S1".
TargetGroup parse_group_spec(const std::string& spec);
std::string group_spec_string(const TargetGroup& g);

nlohmann::json group_to_json(const TargetGroup& g);
TargetGroup group_from_json(const nlohmann::json& j);

/// Entries within 64-bit range serialize as JSON numbers, larger ones as
/// decimal strings; both are accepted on input.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

/// Term lists: [{"exponents": [...], "coefficient": <int-or-string>}, ...]
nlohmann::json poly_to_json(const UniPoly& p);
nlohmann::json poly_to_json(const BiPoly& p);
nlohmann::json poly_to_json(const LaurentMulti& p);

}  // namespace gtutte
