#pragma once

#include <json.hpp>

#include "constel/multipoly.hpp"
#include "constel/xseries.hpp"

namespace constel {

/// [{"coeff": "-2", "V": {"1": 2}, "x": {"1": 1}}, ...] in canonical term
/// order. Coefficients are decimal strings so that no precision is lost.
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

/// {"order": D or null when exact, "terms": <polynomial form>}.
nlohmann::json to_json(const XSeries& s);
XSeries series_from_json(const nlohmann::json& j);

}  // namespace constel
