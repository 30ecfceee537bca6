#include "cli/config.hpp"

#include <fstream>
#include <set>

#include "powerlog/errors.hpp"

namespace powerlog::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("config: '" + key + "' expects a number, got '" + value + "'");
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  static const std::set<std::string> kKeys{"tol", "grid_points", "max_refinements", "richardson", "r_max", "cache"};
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config: line " + std::to_string(line_no) + " is not key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!kKeys.contains(key)) throw DomainError("config: unknown key '" + key + "'");
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

Settings settings_from_file(const std::optional<std::string>& config_path) {
  Settings s;
  if (!config_path || config_path->empty()) return s;
  for (const auto& [key, value] : read_config_file(*config_path)) {
    if (key == "tol") {
      s.solver.tolerance = to_double(key, value);
    } else if (key == "grid_points") {
      s.solver.grid_points = static_cast<int>(to_double(key, value));
    } else if (key == "max_refinements") {
      s.solver.max_refinements = static_cast<int>(to_double(key, value));
    } else if (key == "richardson") {
      if (value != "true" && value != "false" && value != "1" && value != "0") {
        throw DomainError("config: 'richardson' expects true/false");
      }
      s.solver.richardson = value == "true" || value == "1";
    } else if (key == "r_max") {
      s.solver.r_max = to_double(key, value);
    } else if (key == "cache") {
      s.cache_path = value;
    }
  }
  return s;
}

}  // namespace powerlog::cli
