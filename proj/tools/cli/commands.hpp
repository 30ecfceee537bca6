#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/output.hpp"
#include "powerlog/bounds.hpp"
#include "powerlog/interp.hpp"

namespace powerlog::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitSolverFailure = 3,
  kExitCheckFailure = 4,
};

/// Invalid flag combination; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveArgs {
  std::string kind;
  std::optional<double> q;
  int n = 1;
  int ell = 0;
  double mu = 1.0;
  double v = 1.0;
};

struct ScaleArgs {
  std::string kind;
  std::optional<double> q;
  double mu = 1.0;
  double v = 1.0;
  double energy = 0.0;
};

struct InterpArgs {
  double q = 0.0;
  int n = 1;
  int ell = 0;
  bool with_exact = false;
};

struct FigureArgs {
  int figure = 1;
  double q_step = 0.05;
  double exclude = 0.05;
  int n_max = 5;
  int ell_max = 5;
  std::string source = "solver";
};

struct BoundsArgs {
  std::optional<double> q;
  bool log = false;
  int n = 1;
  int ell = 0;
  std::string method;
  std::optional<double> base_q;
  bool base_log = false;
  std::string nodes = "exact";
  std::optional<std::string> side;
  double coupling = 1.0;
  bool with_exact = false;
};

/// Spec from --kind/--q; q must be given iff kind is "power".
[[nodiscard]] PotentialSpec spec_from_kind(const std::string& kind, const std::optional<double>& q,
                                           double mu = 1.0, double v = 1.0);

[[nodiscard]] OutputTable cmd_solve(const SolveArgs& args, const Settings& settings);
[[nodiscard]] OutputTable cmd_scale(const ScaleArgs& args);
[[nodiscard]] OutputTable cmd_interp(const InterpArgs& args, const Settings& settings, std::ostream& log);
[[nodiscard]] OutputTable cmd_figure_data(const FigureArgs& args, const Settings& settings, std::ostream& log);
[[nodiscard]] OutputTable cmd_bounds(const BoundsArgs& args, const Settings& settings, std::ostream& log);

/// The reference table at display precision, plus the unrounded rows for checking.
struct Table1Output {
  OutputTable table;
  std::vector<Table1Row> rows;
};
[[nodiscard]] Table1Output cmd_table1(const Settings& settings, std::ostream& log);

/// Loads `settings.cache_path` when its key matches, otherwise builds the
/// dataset and writes the cache (a write failure is reported on `log`).
[[nodiscard]] PDataset load_or_build_dataset(int n_max, int ell_max, const Settings& settings, std::ostream& log);

/// q grid of the figure data: multiples of `step` in [-1, 2]; figure 1 drops
/// |q| < exclude (and q = 0), figure 2 keeps q = 0 as the logarithm.
[[nodiscard]] std::vector<double> figure_q_grid(int figure, double step, double exclude);

struct Environment {
  std::optional<std::string> config_path;

  /// Reads $POWERLOG_CONFIG.
  static Environment from_process();
};

/// Parses `args` (without the program name), runs the command, writes CSV to
/// `out` and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace powerlog::cli
