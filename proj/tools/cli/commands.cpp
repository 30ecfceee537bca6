#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/golden.hpp"
#include "powerlog/detail/parallel.hpp"
#include "powerlog/errors.hpp"
#include "powerlog/format.hpp"
#include "powerlog/prep.hpp"

namespace powerlog::cli {
namespace {

constexpr int kDatasetMinN = 5;
constexpr int kDatasetMinEll = 5;

std::string num(double v) { return format_significant(v, 12); }

std::vector<QuantumNumbers> levels_ell_major(int n_max, int ell_max) {
  std::vector<QuantumNumbers> levels;
  for (int ell = 0; ell <= ell_max; ++ell) {
    for (int n = 1; n <= n_max; ++n) levels.emplace_back(n, ell);
  }
  return levels;
}

PDataset dataset_for(int n, int ell, const Settings& settings, std::ostream& log) {
  return load_or_build_dataset(std::max(n, kDatasetMinN), std::max(ell, kDatasetMinEll), settings, log);
}

std::string target_name(const PotentialSpec& spec) {
  return spec.is_log() ? std::string("log") : "power:" + num(spec.exponent());
}

}  // namespace

PotentialSpec spec_from_kind(const std::string& kind, const std::optional<double>& q, double mu, double v) {
  if (kind == "power") {
    if (!q) throw UsageError("--q is required with --kind power");
    return PotentialSpec::power(*q, mu, v);
  }
  if (kind == "log") {
    if (q) throw UsageError("--q is not allowed with --kind log");
    return PotentialSpec::log(mu, v);
  }
  throw UsageError("--kind must be 'power' or 'log'");
}

OutputTable cmd_solve(const SolveArgs& args, const Settings& settings) {
  const PotentialSpec spec = spec_from_kind(args.kind, args.q, args.mu, args.v);
  const QuantumNumbers qn(args.n, args.ell);
  const Eigenresult bare = solve_eigenvalue(spec.bare(), qn, settings.solver);
  OutputTable table({"n", "ell", "E", "estimated_error"});
  table.add_row({std::to_string(qn.n()), std::to_string(qn.ell()), num(scale_eigenvalue(spec, bare.energy)),
                 num(bare.estimated_error * scale_factor(spec))});
  return table;
}

OutputTable cmd_scale(const ScaleArgs& args) {
  const PotentialSpec spec = spec_from_kind(args.kind, args.q, args.mu, args.v);
  OutputTable table({"E_bare", "E_scaled"});
  table.add_row({num(args.energy), num(scale_eigenvalue(spec, args.energy))});
  return table;
}

OutputTable cmd_interp(const InterpArgs& args, const Settings& settings, std::ostream& log) {
  if (!(args.q >= -1.0 && args.q <= 2.0)) throw UsageError("--q must lie in [-1, 2]");
  const QuantumNumbers qn(args.n, args.ell);
  const PDataset data = dataset_for(args.n, args.ell, settings, log);
  const PValue p = p_interpolated(data.at(qn).cubic(), args.q);
  const double e_approx = energy_from_p(args.q, p);

  std::vector<std::string> header{"n", "ell", "q", "P_interp", "E_approx"};
  std::vector<std::string> row{std::to_string(qn.n()), std::to_string(qn.ell()), num(args.q), num(p.value()),
                               num(e_approx)};
  if (args.with_exact) {
    const double exact = reference_energy(PotentialSpec::at_exponent(args.q), qn, settings.solver).energy;
    header.insert(header.end(), {"E_exact", "pct_error"});
    row.insert(row.end(), {num(exact), num(percentage_error(e_approx, exact))});
  }
  OutputTable table(header);
  table.add_row(row);
  return table;
}

Table1Output cmd_table1(const Settings& settings, std::ostream& log) {
  const PDataset data = load_or_build_dataset(kDatasetMinN, kDatasetMinEll, settings, log);
  Table1Output out{OutputTable({"n", "ell", "P0", "P1", "E_approx_half", "E_exact_half", "pct_error"}),
                   table1_rows(data, 5, 4, settings.solver)};
  for (const Table1Row& r : out.rows) {
    out.table.add_row({std::to_string(r.n), std::to_string(r.ell), format_fixed(r.p0, 5), format_fixed(r.p1, 5),
                       format_fixed(r.e_approx, 5), format_fixed(r.e_exact, 5), format_fixed(r.pct_error, 3)});
  }
  return out;
}

std::vector<double> figure_q_grid(int figure, double step, double exclude) {
  if (figure != 1 && figure != 2) throw UsageError("--figure must be 1 or 2");
  if (!(step > 0.0) || step > 1.0) throw UsageError("--q-step must lie in (0, 1]");
  const double per_unit = 1.0 / step;
  if (std::abs(per_unit - std::round(per_unit)) > 1e-9) throw UsageError("--q-step must divide 1 evenly");
  if (!(exclude >= 0.0)) throw UsageError("--exclude must be non-negative");
  const long k_per_unit = std::lround(per_unit);
  std::vector<double> grid;
  for (long k = -k_per_unit; k <= 2 * k_per_unit; ++k) {
    const double q = static_cast<double>(k) / static_cast<double>(k_per_unit);
    if (figure == 1 && (k == 0 || std::abs(q) < exclude)) continue;
    grid.push_back(k == 0 ? 0.0 : q);
  }
  return grid;
}

OutputTable cmd_figure_data(const FigureArgs& args, const Settings& settings, std::ostream& log) {
  if (args.n_max < 1 || args.ell_max < 0) throw UsageError("--n-max must be >= 1 and --ell-max >= 0");
  if (args.source != "solver" && args.source != "interp") throw UsageError("--source must be 'solver' or 'interp'");
  const std::vector<double> grid = figure_q_grid(args.figure, args.q_step, args.exclude);
  const std::vector<QuantumNumbers> levels = levels_ell_major(args.n_max, args.ell_max);

  std::optional<PDataset> data;
  if (args.source == "interp") data = dataset_for(args.n_max, args.ell_max, settings, log);

  std::vector<double> values(levels.size() * grid.size());
  detail::parallel_for(values.size(), [&](std::size_t i) {
    const QuantumNumbers qn = levels[i / grid.size()];
    const double q = grid[i % grid.size()];
    if (data) {
      const PValue p = p_interpolated(data->at(qn).cubic(), q);
      values[i] = args.figure == 1 ? energy_from_p(q, p) : p.value();
    } else {
      const double e = reference_energy(PotentialSpec::at_exponent(q), qn, settings.solver).energy;
      values[i] = args.figure == 1 ? e : p_from_energy(q, e).value();
    }
  });

  OutputTable table({"n", "ell", "q", args.figure == 1 ? "E" : "P"});
  for (std::size_t i = 0; i < values.size(); ++i) {
    const QuantumNumbers qn = levels[i / grid.size()];
    table.add_row({std::to_string(qn.n()), std::to_string(qn.ell()), num(grid[i % grid.size()]), num(values[i])});
  }
  return table;
}

OutputTable cmd_bounds(const BoundsArgs& args, const Settings& settings, std::ostream& log) {
  if (args.q.has_value() == args.log) throw UsageError("give exactly one of --q or --log for the target");
  const PotentialSpec target = args.log ? PotentialSpec::log() : PotentialSpec::power(*args.q);
  const QuantumNumbers qn(args.n, args.ell);

  std::optional<double> exact;
  if (args.with_exact) exact = reference_energy(target, qn, settings.solver).energy;

  if (args.method == "monotone") {
    if (args.base_q || args.base_log) throw UsageError("--base-q/--base-log apply only to --method tangent");
    NodeSet nodes;
    PDataset data;
    if (args.nodes == "exact") {
      nodes = NodeSet::kExactEndpoints;
    } else if (args.nodes == "all") {
      nodes = NodeSet::kAll;
      data = dataset_for(args.n, args.ell, settings, log);
    } else {
      throw UsageError("--nodes must be 'exact' or 'all'");
    }
    const EnergyInterval interval = monotone_p_bounds(target.exponent(), qn, data, nodes);
    std::vector<std::string> header{"n", "ell", "target", "lower", "upper"};
    std::vector<std::string> row{std::to_string(qn.n()), std::to_string(qn.ell()), target_name(target),
                                 num(interval.lower), num(interval.upper)};
    if (exact) {
      header.emplace_back("E_exact");
      row.push_back(num(*exact));
    }
    OutputTable table(header);
    table.add_row(row);
    return table;
  }

  if (args.method != "tangent") throw UsageError("--method must be 'monotone' or 'tangent'");
  if (args.base_q.has_value() == args.base_log) throw UsageError("--method tangent needs exactly one of --base-q or --base-log");
  const PotentialSpec base = args.base_log ? PotentialSpec::log() : PotentialSpec::power(*args.base_q);
  const Convexity implied = transformation_convexity(base, target);
  if (args.side) {
    if (*args.side != "upper" && *args.side != "lower") throw UsageError("--side must be 'upper' or 'lower'");
    const Convexity requested = *args.side == "upper" ? Convexity::kConcave : Convexity::kConvex;
    try {
      (void)TangentBoundProblem(base, target, requested, args.coupling);
    } catch (const DomainError& e) {
      throw UsageError(std::string(e.what()) + "; a " + *args.side + " bound needs a " +
                       (requested == Convexity::kConcave ? "concave" : "convex") + " transformation");
    }
  }
  const TangentBound bound = tangent_bound(TangentBoundProblem(base, target, implied, args.coupling), qn,
                                           settings.solver);
  const char* side = bound.side == BoundSide::kUpper ? "upper" : bound.side == BoundSide::kLower ? "lower" : "exact";
  std::vector<std::string> header{"n", "ell", "target", "base", "side", "bound", "contact_t"};
  std::vector<std::string> row{std::to_string(qn.n()), std::to_string(qn.ell()), target_name(target),
                               target_name(base), side, num(bound.energy), num(bound.contact_radius)};
  if (exact) {
    header.emplace_back("E_exact");
    row.push_back(num(*exact));
  }
  OutputTable table(header);
  table.add_row(row);
  return table;
}

PDataset load_or_build_dataset(int n_max, int ell_max, const Settings& settings, std::ostream& log) {
  const std::string key = dataset_cache_key(n_max, ell_max, settings.solver);
  if (std::ifstream in(settings.cache_path); in) {
    try {
      DatasetFile file = read_dataset_csv(in);
      if (file.key == key && file.data.covers(n_max, ell_max)) return std::move(file.data);
      log << "powerlog: cache " << settings.cache_path << " was built with different settings; rebuilding\n";
    } catch (const std::exception& e) {
      log << "powerlog: ignoring unreadable cache " << settings.cache_path << ": " << e.what() << '\n';
    }
  }
  PDataset data = build_p_dataset(n_max, ell_max, settings.solver);
  std::ofstream outfile(settings.cache_path);
  if (outfile) {
    write_dataset_csv(outfile, data, key);
  } else {
    log << "powerlog: could not write cache " << settings.cache_path << '\n';
  }
  return data;
}

Environment Environment::from_process() {
  Environment env;
  if (const char* path = std::getenv(kConfigEnvVar); path != nullptr && *path != '\0') env.config_path = path;
  return env;
}

namespace {

struct CommonFlags {
  std::optional<double> tol;
  std::optional<int> grid_points;
  std::optional<std::string> cache;
  bool meta = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_cache) {
  cmd->add_option("--tol", flags.tol, "target absolute eigenvalue accuracy (default 1e-6)");
  cmd->add_option("--grid-points", flags.grid_points, "initial interior grid points (default 4000)");
  cmd->add_flag("--meta", flags.meta, "prepend a '#' comment line with the effective settings");
  if (with_cache) cmd->add_option("--cache", flags.cache, "P dataset cache file (default ./pdata.csv)");
}

Settings resolve(const CommonFlags& flags, const Environment& env) {
  Settings s = settings_from_file(env.config_path);
  if (flags.tol) s.solver.tolerance = *flags.tol;
  if (flags.grid_points) s.solver.grid_points = *flags.grid_points;
  if (flags.cache) s.cache_path = *flags.cache;
  s.solver.validate();
  return s;
}

void write_meta(std::ostream& out, const std::string& command, const Settings& s) {
  out << "# powerlog " << command << " tol=" << format_significant(s.solver.tolerance, 6)
      << " grid_points=" << s.solver.grid_points << " richardson=" << (s.solver.richardson ? "true" : "false")
      << " max_refinements=" << s.solver.max_refinements
      << " r_max=" << (s.solver.r_max ? format_significant(*s.solver.r_max, 12) : std::string("auto"))
      << " cache=" << s.cache_path << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Eigenvalues of power-law and logarithmic central potentials in the P-representation", "powerlog"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all subcommand help");

  CommonFlags common;

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve one radial eigenvalue");
  solve_cmd->add_option("--kind", solve.kind, "power | log")->required()->check(CLI::IsMember({"power", "log"}));
  solve_cmd->add_option("--q", solve.q, "power exponent in [-1, 2], q != 0 (power only)");
  solve_cmd->add_option("--n", solve.n, "level index n >= 1")->required();
  solve_cmd->add_option("--ell", solve.ell, "angular momentum")->required();
  solve_cmd->add_option("--mu", solve.mu, "kinetic coefficient mu");
  solve_cmd->add_option("--v", solve.v, "coupling v");
  add_common(solve_cmd, common, false);

  ScaleArgs scale;
  auto* scale_cmd = app.add_subcommand("scale", "map a bare eigenvalue to -mu Laplacian + v V");
  scale_cmd->add_option("--kind", scale.kind, "power | log")->required()->check(CLI::IsMember({"power", "log"}));
  scale_cmd->add_option("--q", scale.q, "power exponent (power only)");
  scale_cmd->add_option("--mu", scale.mu, "kinetic coefficient mu");
  scale_cmd->add_option("--v", scale.v, "coupling v");
  scale_cmd->add_option("--energy", scale.energy, "bare eigenvalue")->required();
  add_common(scale_cmd, common, false);

  InterpArgs interp;
  auto* interp_cmd = app.add_subcommand("interp", "cubic P(q) interpolation at one q (q = 0 is the logarithm)");
  interp_cmd->add_option("--q", interp.q, "q in [-1, 2]")->required();
  interp_cmd->add_option("--n", interp.n, "level index n >= 1")->required();
  interp_cmd->add_option("--ell", interp.ell, "angular momentum")->required();
  interp_cmd->add_flag("--with-exact", interp.with_exact, "add the solver eigenvalue and the percentage error");
  add_common(interp_cmd, common, true);

  bool check = false;
  std::optional<std::string> golden_path;
  auto* table_cmd = app.add_subcommand("table1", "recompute the 25-row interpolation table at q = 1/2");
  table_cmd->add_flag("--check", check, "compare against the published values; exit 4 on mismatch");
  table_cmd->add_option("--golden", golden_path, "golden CSV to compare against (default: built in)");
  add_common(table_cmd, common, true);

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand(
      "figure-data", "long-format E(q) (figure 1) or P(q) (figure 2) data; figure 1 omits |q| < --exclude");
  figure_cmd->add_option("--figure", figure.figure, "1 = E(q), 2 = P(q)")->required();
  figure_cmd->add_option("--q-step", figure.q_step, "q grid step; must divide 1 (default 0.05)");
  figure_cmd->add_option("--exclude", figure.exclude, "figure 1: omit |q| below this (default 0.05)");
  figure_cmd->add_option("--n-max", figure.n_max, "largest n (default 5)");
  figure_cmd->add_option("--ell-max", figure.ell_max, "largest ell (default 5)");
  figure_cmd->add_option("--source", figure.source, "solver | interp (default solver)");
  add_common(figure_cmd, common, true);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "energy bounds from P monotonicity or tangent potentials");
  bounds_cmd->add_option("--q", bounds.q, "target power exponent");
  bounds_cmd->add_flag("--log", bounds.log, "target is the logarithm");
  bounds_cmd->add_option("--n", bounds.n, "level index n >= 1")->required();
  bounds_cmd->add_option("--ell", bounds.ell, "angular momentum")->required();
  bounds_cmd->add_option("--method", bounds.method, "monotone | tangent")->required();
  bounds_cmd->add_option("--base-q", bounds.base_q, "tangent: base power exponent");
  bounds_cmd->add_flag("--base-log", bounds.base_log, "tangent: base is the logarithm");
  bounds_cmd->add_option("--nodes", bounds.nodes, "monotone: exact (q = -1, 2) | all dataset nodes");
  bounds_cmd->add_option("--side", bounds.side, "tangent: require an upper or lower bound");
  bounds_cmd->add_option("--coupling", bounds.coupling, "tangent: coupling v of the target");
  bounds_cmd->add_flag("--with-exact", bounds.with_exact, "add the reference eigenvalue");
  add_common(bounds_cmd, common, true);

  int cache_n_max = kDatasetMinN;
  int cache_ell_max = kDatasetMinEll;
  auto* cache_cmd = app.add_subcommand("build-cache", "build and store the P dataset");
  cache_cmd->add_option("--n-max", cache_n_max, "largest n (default 5)");
  cache_cmd->add_option("--ell-max", cache_ell_max, "largest ell (default 5)");
  add_common(cache_cmd, common, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Settings settings = resolve(common, env);
    CLI::App* cmd = app.get_subcommands().front();
    if (common.meta) write_meta(out, cmd->get_name(), settings);

    if (cmd == solve_cmd) {
      cmd_solve(solve, settings).write(out);
    } else if (cmd == scale_cmd) {
      cmd_scale(scale).write(out);
    } else if (cmd == interp_cmd) {
      cmd_interp(interp, settings, err).write(out);
    } else if (cmd == figure_cmd) {
      cmd_figure_data(figure, settings, err).write(out);
    } else if (cmd == bounds_cmd) {
      cmd_bounds(bounds, settings, err).write(out);
    } else if (cmd == cache_cmd) {
      if (cache_n_max < 1 || cache_ell_max < 0) throw UsageError("--n-max must be >= 1 and --ell-max >= 0");
      const PDataset data = load_or_build_dataset(cache_n_max, cache_ell_max, settings, err);
      OutputTable summary({"rows", "key", "path"});
      summary.add_row({std::to_string(data.size()), dataset_cache_key(cache_n_max, cache_ell_max, settings.solver),
                       settings.cache_path});
      summary.write(out);
    } else if (cmd == table_cmd) {
      const Table1Output result = cmd_table1(settings, err);
      result.table.write(out);
      if (check) {
        std::vector<Table1Row> golden;
        if (golden_path) {
          std::ifstream in(*golden_path);
          if (!in) throw UsageError("cannot open golden file " + *golden_path);
          golden = parse_golden_csv(in);
        } else {
          golden = embedded_table1_golden();
        }
        const auto mismatches = compare_with_golden(result.rows, golden);
        for (const auto& m : mismatches) {
          err << "table1 check failed: row (n=" << m.n << ", ell=" << m.ell << ") " << m.column << ": computed "
              << format_significant(m.computed, 8) << ", published " << format_significant(m.published, 8)
              << ", tolerance " << format_significant(m.tolerance, 3) << '\n';
        }
        if (!mismatches.empty()) return kExitCheckFailure;
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "powerlog: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "powerlog: invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LookupError& e) {
    err << "powerlog: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "powerlog: solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const ConsistencyError& e) {
    err << "powerlog: solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const NumericalError& e) {
    err << "powerlog: solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  }
}

}  // namespace powerlog::cli
