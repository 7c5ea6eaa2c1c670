#pragma once

#include <string>

// Vendored nlohmann/json.
#include "json.hpp"

#include "comtet/engine.hpp"
#include "comtet/poly.hpp"
#include "comtet/series.hpp"

namespace comtet {

// {"n":..., "patterns":[...], "rows":[[...],...]}
nlohmann::json matrix_to_json(const DistMatrix& m, const PatternSet& ps);
DistMatrix matrix_from_json(const nlohmann::json& j);

// [{"exps":{"t":1,...}, "num":"...", "den":"..."}, ...]
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

// [{"z":n, "terms":[...]}, ...]
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

}  // namespace comtet
