#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wplap/config.hpp"

namespace wplap {

/// Built-in weight scenarios: the two admissible pairs from the classical
/// examples (a radial power weight against a constant, and a
/// distance-to-boundary pair) plus an unweighted p = 2 control case.
std::vector<std::pair<std::string, ExperimentConfig>> builtin_scenarios();

/// Look up a built-in scenario by name; throws std::invalid_argument for
/// unknown names.
ExperimentConfig scenario(const std::string& name);

std::vector<std::string> scenario_names();

}  // namespace wplap
