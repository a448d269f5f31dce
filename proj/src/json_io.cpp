#include "hookcensus/json_io.hpp"

#include <stdexcept>

namespace hookcensus {

nlohmann::json config_to_json(const HookConfiguration& config) {
  nlohmann::json j;
  j["pi"] = config.pi.entries();
  j["hooks"] = nlohmann::json::array();
  for (const Hook& h : config.hooks) j["hooks"].push_back({h.sw, h.ne});
  return j;
}

nlohmann::json diagram_to_json(const HookConfiguration& config, const ColoredDiagram& diagram) {
  nlohmann::json j = config_to_json(config);
  j["colors"] = diagram.color_of;
  j["q"] = diagram.q;
  j["theta"] = diagram.theta;
  nlohmann::json w = nlohmann::json::object();
  for (int pos = 1; pos <= diagram.n; ++pos) {
    if (diagram.w[pos - 1] > 0) w[std::to_string(pos)] = diagram.w[pos - 1];
  }
  j["w"] = w;
  return j;
}

HookConfiguration config_from_json(const nlohmann::json& j) {
  if (!j.contains("pi") || !j.contains("hooks")) {
    throw std::invalid_argument("configuration JSON needs \"pi\" and \"hooks\"");
  }
  HookConfiguration config;
  config.pi = Permutation(j.at("pi").get<std::vector<int>>());
  for (const auto& pair : j.at("hooks")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("hook entries must be [sw, ne] pairs");
    }
    config.hooks.push_back(Hook{pair[0].get<int>(), pair[1].get<int>()});
  }
  return config;
}

}  // namespace hookcensus
