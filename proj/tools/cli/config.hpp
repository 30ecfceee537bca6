#pragma once

#include <map>
#include <optional>
#include <string>

#include "powerlog/radial_solver.hpp"

namespace powerlog::cli {

inline constexpr const char* kConfigEnvVar = "POWERLOG_CONFIG";
inline constexpr const char* kDefaultCachePath = "./pdata.csv";

/// Settings shared by the subcommands.  Resolution order: command-line flag,
/// then the key=value file named by $POWERLOG_CONFIG, then built-in defaults.
struct Settings {
  SolverConfig solver;
  std::string cache_path = kDefaultCachePath;
};

/// Parses "key = value" lines; '#' starts a comment.  Recognized keys: tol,
/// grid_points, max_refinements, richardson, r_max, cache.  Unknown keys are
/// an error so typos do not pass silently.
[[nodiscard]] std::map<std::string, std::string> read_config_file(const std::string& path);

/// Defaults overridden by the config file (if any).
[[nodiscard]] Settings settings_from_file(const std::optional<std::string>& config_path);

}  // namespace powerlog::cli
