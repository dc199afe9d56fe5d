#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rydcav/scenario.hpp"

namespace rydcav {

struct PresetOptions {
  std::optional<int> n_atoms;
  std::string kappa_mode;  // "weak" | "strong" where the preset has both
  std::string variant;     // preset-specific, see preset_variants()
};

std::vector<std::string> preset_names();
std::vector<std::string> preset_variants(const std::string& name);

// Config JSON for a named preset; throws ConfigError on unknown names or options.
json preset_config(const std::string& name, const PresetOptions& opt = {});

// Sweep configs: "fig6-long" (cooperativity axis, long cavity) and
// "fig6-atoms" (atom-number axis, short cavity).
std::vector<std::string> sweep_preset_names();
json sweep_preset_config(const std::string& name);

}  // namespace rydcav
