#pragma once

#include "hyperlat/planar_map.hpp"
#include "json.hpp"

namespace hyperlat {

// Internal json bridge shared by the serialization paths.
nlohmann::json map_to_json(const PlanarMap& map);
PlanarMap map_from_json(const nlohmann::json& j);

}  // namespace hyperlat
