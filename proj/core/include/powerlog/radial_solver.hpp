#pragma once

#include <optional>
#include <vector>

#include "powerlog/potentials.hpp"

namespace powerlog {

/// Discretization controls for the finite-difference radial solver.
///
/// The reduced radial operator -mu u'' + [mu l(l+1)/r^2 + v V(r)] u is
/// discretized with central differences on r_i = i h, i = 1..grid_points,
/// h = r_max / (grid_points + 1), with u(0) = u(r_max) = 0.  The inner cutoff
/// r_min is therefore one grid step.
struct SolverConfig {
  int grid_points = 4000;
  /// Outer cutoff; chosen from a WKB decay estimate when empty.
  std::optional<double> r_max;
  /// Target absolute accuracy of the returned eigenvalue.
  double tolerance = 1e-6;
  /// Extrapolate h -> 0 from the step sequence h, h/2, h/4.
  bool richardson = true;
  /// Maximum number of grid doublings after the initial passes.
  int max_refinements = 9;

  void validate() const;
};

struct Eigenresult {
  double energy = 0.0;
  /// Interior sign changes of the discrete eigenvector on the finest grid.
  int node_count = 0;
  /// Input config with grid_points and r_max replaced by the values used on
  /// the finest grid.
  SolverConfig config_used;
  double r_min = 0.0;
  double estimated_error = 0.0;
};

/// n-th eigenvalue of the ell subspace for -mu Laplacian + v V.  Throws
/// ConvergenceError when the refinement or box-size checks cannot be met and
/// ConsistencyError when the eigenvector has the wrong number of nodes.
[[nodiscard]] Eigenresult solve_eigenvalue(const PotentialSpec& spec, QuantumNumbers qn,
                                           const SolverConfig& cfg = {});

struct SpectrumEntry {
  QuantumNumbers qn;
  Eigenresult result;
};

class SpectrumTable {
 public:
  SpectrumTable(PotentialSpec spec, std::vector<SpectrumEntry> entries);

  [[nodiscard]] const PotentialSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  /// Throws LookupError when (n, ell) was not solved.
  [[nodiscard]] const Eigenresult& at(QuantumNumbers qn) const;

 private:
  PotentialSpec spec_;
  std::vector<SpectrumEntry> entries_;
};

/// All levels 1 <= n <= n_max, 0 <= ell <= ell_max (ell-major order), solved
/// concurrently.  Energies are checked to increase strictly with n.
[[nodiscard]] SpectrumTable solve_spectrum(const PotentialSpec& spec, int n_max, int ell_max,
                                           const SolverConfig& cfg = {});

/// Upper estimate of E_{n ell} used to size the box: the P value of the
/// oscillator endpoint never underestimates P(q), and E grows with P.
[[nodiscard]] double first_pass_estimate(const PotentialSpec& spec, QuantumNumbers qn);

/// Outer cutoff at which the WKB decay exponent beyond the classical turning
/// point of `energy` reaches `decay_exponent`.
[[nodiscard]] double box_radius(const PotentialSpec& spec, int ell, double energy,
                                double decay_exponent = 30.0);

namespace detail {

/// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
[[nodiscard]] int sturm_count(const Tridiagonal& t, double x);

/// Index-th (1-based) eigenvalue by Sturm bisection with Rayleigh-quotient
/// polishing; `guess` narrows the initial bracket when provided.
[[nodiscard]] double tridiagonal_eigenvalue(const Tridiagonal& t, int index,
                                            std::optional<double> guess = std::nullopt);

/// Eigenvector for an (accurate) eigenvalue via twisted factorization.
[[nodiscard]] std::vector<double> tridiagonal_eigenvector(const Tridiagonal& t, double lambda);

/// Finite-difference matrix of the reduced radial operator.
[[nodiscard]] Tridiagonal radial_matrix(const PotentialSpec& spec, int ell, double r_max,
                                        int grid_points);

/// Sign changes, ignoring entries below `relative_floor` * max |u|.
[[nodiscard]] int count_nodes(const std::vector<double>& u, double relative_floor = 1e-12);

}  // namespace detail
}  // namespace powerlog
