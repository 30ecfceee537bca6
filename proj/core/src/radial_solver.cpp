#include "powerlog/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "powerlog/detail/parallel.hpp"
#include "powerlog/errors.hpp"
#include "powerlog/prep.hpp"

namespace powerlog {
namespace {

constexpr double kTailWindow = 0.05;        // last 5% of the box
constexpr double kTailAmplitude = 1e-8;     // relative to max |u|
constexpr int kMaxBoxEnlargements = 6;
constexpr double kBoxGrowth = 1.5;
constexpr double kMaxBoxRadius = 1e7;
constexpr double kRoundoffUlps = 4.0;        // eigenvalue rounding, in units of eps * ||A||

std::string level_name(QuantumNumbers qn) {
  return "(n=" + std::to_string(qn.n()) + ", ell=" + std::to_string(qn.ell()) + ")";
}

// Replaces an exact zero pivot so the recurrences stay finite.
inline double nonzero(double d, double scale) {
  return d != 0.0 ? d : -std::numeric_limits<double>::epsilon() * scale;
}

struct Twisted {
  std::vector<double> z;
  double gamma;
  double norm2;
};

Twisted twisted_solve(const detail::Tridiagonal& t, double lambda) {
  const std::size_t n = t.diag.size();
  const double e = t.off;
  const double e2 = e * e;
  const double scale = std::abs(lambda) + 2.0 * std::abs(e) + 1.0;
  std::vector<double> plus(n);
  std::vector<double> minus(n);
  plus[0] = nonzero(t.diag[0] - lambda, scale);
  for (std::size_t i = 1; i < n; ++i) plus[i] = nonzero(t.diag[i] - lambda - e2 / plus[i - 1], scale);
  minus[n - 1] = nonzero(t.diag[n - 1] - lambda, scale);
  for (std::size_t i = n - 1; i-- > 0;) minus[i] = nonzero(t.diag[i] - lambda - e2 / minus[i + 1], scale);

  std::size_t k = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double gamma = plus[i] + minus[i] - (t.diag[i] - lambda);
    if (std::abs(gamma) < best) {
      best = std::abs(gamma);
      k = i;
    }
  }
  const double gamma = plus[k] + minus[k] - (t.diag[k] - lambda);

  std::vector<double> z(n, 0.0);
  z[k] = 1.0;
  constexpr double kFloor = 1e-280;
  for (std::size_t i = k; i-- > 0;) {
    const double v = -e * z[i + 1] / plus[i];
    z[i] = std::abs(v) < kFloor ? 0.0 : v;
  }
  for (std::size_t i = k + 1; i < n; ++i) {
    const double v = -e * z[i - 1] / minus[i];
    z[i] = std::abs(v) < kFloor ? 0.0 : v;
  }
  double norm2 = 0.0;
  for (double v : z) norm2 += v * v;
  return {std::move(z), gamma, norm2};
}

struct BoxSolution {
  double energy;
  double error;
  int grid_points;
  double h;
  std::vector<double> eigenvector;
};

// Runs the h, h/2, h/4, ... sequence in a fixed box until two successive
// Richardson values agree to the tolerance.
BoxSolution refine_in_box(const PotentialSpec& spec, QuantumNumbers qn, const SolverConfig& cfg,
                          double r_max) {
  std::vector<int> points{cfg.grid_points};
  std::vector<double> raw;
  std::optional<double> guess;

  auto solve_grid = [&](int grid_points) {
    const detail::Tridiagonal t = detail::radial_matrix(spec, qn.ell(), r_max, grid_points);
    const double e = detail::tridiagonal_eigenvalue(t, qn.n(), guess);
    guess = e;
    return e;
  };
  auto next_points = [](int n) {
    if (n > std::numeric_limits<int>::max() / 2 - 1) throw ConvergenceError("grid size overflow");
    return 2 * n + 1;  // halves h exactly: (n + 1) h = r_max
  };

  raw.push_back(solve_grid(points.back()));
  const int initial_passes = cfg.richardson ? 2 : 1;
  for (int i = 0; i < initial_passes; ++i) {
    points.push_back(next_points(points.back()));
    raw.push_back(solve_grid(points.back()));
  }

  // The kinetic part of the matrix grows like 1/h^2, so rounding in the
  // eigenvalue does too; successive estimates can agree by chance far below it.
  auto roundoff = [&]() {
    const double h = r_max / (points.back() + 1.0);
    const double cent = qn.ell() * (qn.ell() + 1.0);
    return kRoundoffUlps * std::numeric_limits<double>::epsilon() * spec.mu() * (4.0 + cent) / (h * h);
  };
  auto estimate = [&]() -> std::pair<double, double> {
    const std::size_t m = raw.size();
    if (!cfg.richardson) return {raw[m - 1], std::max(std::abs(raw[m - 1] - raw[m - 2]) / 3.0, roundoff())};
    const double coarse = (4.0 * raw[m - 2] - raw[m - 3]) / 3.0;
    const double fine = (4.0 * raw[m - 1] - raw[m - 2]) / 3.0;
    return {fine, std::max(std::abs(fine - coarse), roundoff())};
  };

  auto [energy, error] = estimate();
  for (int refinement = 0; error > cfg.tolerance && refinement < cfg.max_refinements; ++refinement) {
    points.push_back(next_points(points.back()));
    raw.push_back(solve_grid(points.back()));
    std::tie(energy, error) = estimate();
  }
  if (error > cfg.tolerance) {
    std::ostringstream os;
    os << "grid refinement check failed for " << level_name(qn) << ": successive estimates differ by "
       << error << " > tolerance " << cfg.tolerance << " at " << points.back() << " grid points";
    throw ConvergenceError(os.str());
  }

  const int finest = points.back();
  const detail::Tridiagonal t = detail::radial_matrix(spec, qn.ell(), r_max, finest);
  return {energy, error, finest, r_max / (finest + 1.0),
          detail::tridiagonal_eigenvector(t, raw.back())};
}

double tail_amplitude(const std::vector<double>& u) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  const std::size_t start = static_cast<std::size_t>((1.0 - kTailWindow) * u.size());
  double tail = 0.0;
  for (std::size_t i = start; i < u.size(); ++i) tail = std::max(tail, std::abs(u[i]));
  return peak > 0.0 ? tail / peak : 1.0;
}

}  // namespace

void SolverConfig::validate() const {
  if (grid_points < 100) throw DomainError("SolverConfig: grid_points must be >= 100");
  if (!(tolerance > 0.0)) throw DomainError("SolverConfig: tolerance must be positive");
  if (r_max && !(*r_max > 0.0)) throw DomainError("SolverConfig: r_max must be positive");
  if (r_max && !(*r_max / (grid_points + 1.0) < *r_max)) throw DomainError("SolverConfig: r_min must be < r_max");
  if (max_refinements < 0) throw DomainError("SolverConfig: max_refinements must be >= 0");
}

namespace detail {

int sturm_count(const Tridiagonal& t, double x) {
  const double e2 = t.off * t.off;
  const double scale = std::abs(x) + 2.0 * std::abs(t.off) + 1.0;
  int count = 0;
  double d = nonzero(t.diag[0] - x, scale);
  count += d < 0.0;
  const std::size_t n = t.diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    d = nonzero(t.diag[i] - x - e2 / d, scale);
    count += d < 0.0;
  }
  return count;
}

double tridiagonal_eigenvalue(const Tridiagonal& t, int index, std::optional<double> guess) {
  if (index < 1 || static_cast<std::size_t>(index) > t.diag.size()) {
    throw DomainError("tridiagonal_eigenvalue: index out of range");
  }
  const auto [dmin, dmax] = std::minmax_element(t.diag.begin(), t.diag.end());
  const double radius = 2.0 * std::abs(t.off);
  double lo = *dmin - radius;
  double hi = *dmax + radius;

  // lo has fewer than `index` eigenvalues below it, hi at least `index`
  if (guess) {
    double width = 1e-6 * (std::abs(*guess) + 1.0);
    for (int i = 0; i < 40; ++i, width *= 4.0) {
      const double a = std::max(lo, *guess - width);
      const double b = std::min(hi, *guess + width);
      if (sturm_count(t, a) < index && sturm_count(t, b) >= index) {
        lo = a;
        hi = b;
        break;
      }
    }
  }

  auto converged = [](double a, double b) {
    return b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)) ||
           b - a <= 1e-300;
  };
  auto bisect = [&](double stop_relative) {
    while (!converged(lo, hi) && hi - lo > stop_relative * (std::abs(lo) + std::abs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(t, mid) >= index) hi = mid;
      else lo = mid;
    }
  };

  // isolate, then Rayleigh-quotient steps from the twisted factorization;
  // any step leaving the isolating bracket falls back to more bisection.
  for (double stop = 1e-4; stop >= 1e-12; stop *= 1e-2) {
    bisect(stop);
    if (converged(lo, hi)) return 0.5 * (lo + hi);
    if (sturm_count(t, lo) != index - 1 || sturm_count(t, hi) != index) continue;
    double lambda = 0.5 * (lo + hi);
    bool left = false;
    for (int it = 0; it < 8; ++it) {
      const Twisted tw = twisted_solve(t, lambda);
      const double next = lambda + tw.gamma / tw.norm2;
      if (!(next > lo && next < hi)) {
        left = true;
        break;
      }
      const double step = std::abs(next - lambda);
      lambda = next;
      if (step <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lambda))) {
        return lambda;
      }
    }
    if (!left) return lambda;
  }
  bisect(0.0);
  return 0.5 * (lo + hi);
}

std::vector<double> tridiagonal_eigenvector(const Tridiagonal& t, double lambda) {
  Twisted tw = twisted_solve(t, lambda);
  const double norm = std::sqrt(tw.norm2);
  for (double& v : tw.z) v /= norm;
  return std::move(tw.z);
}

Tridiagonal radial_matrix(const PotentialSpec& spec, int ell, double r_max, int grid_points) {
  const double h = r_max / (grid_points + 1.0);
  const double kinetic = spec.mu() / (h * h);
  Tridiagonal t;
  t.off = -kinetic;
  t.diag.resize(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    t.diag[static_cast<std::size_t>(i)] = 2.0 * kinetic + effective_potential(spec, ell, (i + 1) * h);
  }
  return t;
}

int count_nodes(const std::vector<double>& u, double relative_floor) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  const double floor = relative_floor * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : u) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

}  // namespace detail

double first_pass_estimate(const PotentialSpec& spec, QuantumNumbers qn) {
  const PValue upper = exact_p(2.0, qn);
  return scale_eigenvalue(spec, energy_from_p(spec.exponent(), upper));
}

double box_radius(const PotentialSpec& spec, int ell, double energy, double decay_exponent) {
  // locate the well bottom on a geometric scan, then walk outward
  constexpr double kRatio = 1.002;
  double r = 1e-6;
  double best_r = r;
  double best_v = effective_potential(spec, ell, r);
  for (double s = r; s < 1e8; s *= 1.05) {
    const double v = effective_potential(spec, ell, s);
    if (v < best_v) {
      best_v = v;
      best_r = s;
    }
  }
  if (!(best_v < energy)) throw ConvergenceError("box sizing: energy estimate lies below the potential well");

  r = best_r;
  while (effective_potential(spec, ell, r) < energy) {
    r *= kRatio;
    if (r > kMaxBoxRadius) throw ConvergenceError("box sizing: no outer turning point below 1e7");
  }
  const double turning = r;
  double integral = 0.0;
  double prev = 0.0;
  while (integral < decay_exponent) {
    const double next = r * kRatio;
    const double cur = std::sqrt(std::max(0.0, (effective_potential(spec, ell, next) - energy) / spec.mu()));
    integral += 0.5 * (prev + cur) * (next - r);
    prev = cur;
    r = next;
    if (r > kMaxBoxRadius) throw ConvergenceError("box sizing: WKB decay not reached below r = 1e7");
  }
  return std::max(r, 1.5 * turning);
}

Eigenresult solve_eigenvalue(const PotentialSpec& spec, QuantumNumbers qn, const SolverConfig& cfg) {
  cfg.validate();
  double r_max = cfg.r_max ? *cfg.r_max : box_radius(spec, qn.ell(), first_pass_estimate(spec, qn));

  for (int attempt = 0;; ++attempt) {
    BoxSolution sol = refine_in_box(spec, qn, cfg, r_max);
    const int nodes = detail::count_nodes(sol.eigenvector);
    const double tail = tail_amplitude(sol.eigenvector);
    if (tail > kTailAmplitude) {
      if (cfg.r_max || attempt >= kMaxBoxEnlargements) {
        std::ostringstream os;
        os << "tail amplitude check failed for " << level_name(qn) << ": |u| near r_max = " << r_max
           << " is " << tail << " of its peak (limit " << kTailAmplitude << "); the state is not bound in the box";
        throw ConvergenceError(os.str());
      }
      r_max *= kBoxGrowth;
      continue;
    }
    if (nodes != qn.n() - 1) {
      std::ostringstream os;
      os << "node count check failed for " << level_name(qn) << ": eigenvector has " << nodes
         << " nodes, expected " << qn.n() - 1;
      throw ConsistencyError(os.str());
    }
    Eigenresult result;
    result.energy = sol.energy;
    result.node_count = nodes;
    result.config_used = cfg;
    result.config_used.grid_points = sol.grid_points;
    result.config_used.r_max = r_max;
    result.r_min = sol.h;
    result.estimated_error = std::max(sol.error, std::numeric_limits<double>::min());
    return result;
  }
}

SpectrumTable::SpectrumTable(PotentialSpec spec, std::vector<SpectrumEntry> entries)
    : spec_(spec), entries_(std::move(entries)) {}

const Eigenresult& SpectrumTable::at(QuantumNumbers qn) const {
  for (const auto& e : entries_) {
    if (e.qn == qn) return e.result;
  }
  throw LookupError("spectrum table has no level " + level_name(qn));
}

SpectrumTable solve_spectrum(const PotentialSpec& spec, int n_max, int ell_max, const SolverConfig& cfg) {
  if (n_max < 1) throw DomainError("solve_spectrum: n_max must be >= 1");
  if (ell_max < 0) throw DomainError("solve_spectrum: ell_max must be >= 0");
  std::vector<QuantumNumbers> levels;
  for (int ell = 0; ell <= ell_max; ++ell) {
    for (int n = 1; n <= n_max; ++n) levels.emplace_back(n, ell);
  }
  std::vector<std::optional<Eigenresult>> results(levels.size());
  detail::parallel_for(levels.size(), [&](std::size_t i) {
    try {
      results[i] = solve_eigenvalue(spec, levels[i], cfg);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(level_name(levels[i]) + ": " + e.what());
    } catch (const ConsistencyError& e) {
      throw ConsistencyError(level_name(levels[i]) + ": " + e.what());
    }
  });

  std::vector<SpectrumEntry> entries;
  entries.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0 && levels[i].ell() == levels[i - 1].ell() && !(results[i]->energy > results[i - 1]->energy)) {
      throw ConsistencyError("energies do not increase with n at " + level_name(levels[i]));
    }
    entries.push_back({levels[i], *results[i]});
  }
  return SpectrumTable(spec, std::move(entries));
}

}  // namespace powerlog
