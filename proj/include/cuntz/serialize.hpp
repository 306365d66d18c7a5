#pragma once

#include <string>

#include "json.hpp"

#include "cuntz/element.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/thompson.hpp"

namespace cuntz {

/// {"n": 2, "terms": [{"re": "1", "im": "0", "alpha": "11", "beta": "1"}, ...]}
/// in canonical term order.
nlohmann::json to_json(const Element& x);
/// Validates and canonicalizes; throws std::invalid_argument on bad input.
Element element_from_json(const nlohmann::json& j);

/// Compact single-line dump used for bit-exact round trips.
std::string dump_element(const Element& x);
Element parse_element_json(const std::string& text);

nlohmann::json to_json(const ScalingReport& report);
nlohmann::json to_json(const PLMap& map);
nlohmann::json to_json(const TableUnitary& w);

}  // namespace cuntz
