#pragma once

#include <json.hpp>

#include "hookcensus/hooks.hpp"

namespace hookcensus {

// Wire form of a configuration, 1-based indices:
//   {"pi": [2,1,3], "hooks": [[1,3],[2,3]]}
// The diagram form adds "colors" (per position), "q", "theta", and "w" (an
// object keyed by position, listing only positions hit by a hook). These
// field names are contractual.
nlohmann::json config_to_json(const HookConfiguration& config);
nlohmann::json diagram_to_json(const HookConfiguration& config, const ColoredDiagram& diagram);
HookConfiguration config_from_json(const nlohmann::json& j);

}  // namespace hookcensus
