#pragma once

#include <string_view>
#include <vector>

#include "ugsb/cli/scenario.hpp"

namespace ugsb::cli {

struct Preset {
  std::string_view name;
  std::string_view command;
  std::string_view description;
  std::string_view json;
};

const std::vector<Preset>& presets();
/// Throws ConfigurationError for an unknown name.
ScenarioConfig preset_scenario(std::string_view name);

}  // namespace ugsb::cli
