#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wplap/config.hpp"

namespace wplap {

namespace exit_code {
constexpr int ok = 0;
constexpr int parse = 2;
constexpr int precondition = 3;
constexpr int solver = 4;
}  // namespace exit_code

/// Execute one experiment: validate the config, dispatch to the module the
/// command names, and persist report.json plus the command's CSV artifacts
/// into the output directory.  Returns one of the exit_code values; every
/// failure is also recorded in report.json under "error".
int run_experiment(ExperimentConfig config, const std::string& out_dir_override = "",
                   std::optional<std::uint64_t> seed_override = {});

}  // namespace wplap
