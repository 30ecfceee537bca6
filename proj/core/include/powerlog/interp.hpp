#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powerlog/potentials.hpp"
#include "powerlog/prep.hpp"
#include "powerlog/radial_solver.hpp"

namespace powerlog {

/// Interpolation nodes, in the order P values are stored.
inline constexpr std::array<double, 4> kNodes{-1.0, 0.0, 1.0, 2.0};

/// P(q) = a + b q + c q^2 + d q^3.
struct CubicCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  [[nodiscard]] double operator()(double q) const noexcept { return a + q * (b + q * (c + q * d)); }
};

/// Coefficients from the node values P(-1), P(0), P(1), P(2) through the
/// explicit inverse of the 4x4 Vandermonde system.
[[nodiscard]] CubicCoeffs fit_cubic(PValue p_m1, PValue p_0, PValue p_1, PValue p_2);

/// Evaluates the cubic on [-1, 2]; no extrapolation.
[[nodiscard]] PValue p_interpolated(const CubicCoeffs& coeffs, double q);

enum class Provenance { kExactFormula, kAiry, kSolver };

[[nodiscard]] std::string_view to_string(Provenance p) noexcept;
[[nodiscard]] Provenance provenance_from_string(std::string_view s);

/// Node values for one (n, ell), indexed like kNodes.
struct NodeValues {
  std::array<double, 4> p{};
  std::array<Provenance, 4> provenance{};

  [[nodiscard]] CubicCoeffs cubic() const;
};

/// P values at the four nodes for a set of levels.  Rows are validated on
/// insertion: P increases across the nodes and the q = -1, 2 values are the
/// exact endpoint formulas.
class PDataset {
 public:
  void insert(QuantumNumbers qn, const NodeValues& values);
  [[nodiscard]] const NodeValues& at(QuantumNumbers qn) const;
  [[nodiscard]] bool contains(QuantumNumbers qn) const { return rows_.contains(qn); }
  [[nodiscard]] bool covers(int n_max, int ell_max) const;
  [[nodiscard]] const std::map<QuantumNumbers, NodeValues>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::map<QuantumNumbers, NodeValues> rows_;
};

struct ReferenceEnergy {
  double energy;
  Provenance provenance;
  double estimated_error;
};

/// Best available bare eigenvalue: closed form at q = -1 and 2, Airy zeros for
/// linear S states, the radial solver otherwise.
[[nodiscard]] ReferenceEnergy reference_energy(const PotentialSpec& spec, QuantumNumbers qn,
                                               const SolverConfig& cfg = {});

/// E^A(q): the interpolated P pushed through the P -> E map at q
/// (logarithmic map at q = 0).
[[nodiscard]] double approx_energy(QuantumNumbers qn, double q, const PDataset& data);

/// Builds node values for 1 <= n <= n_max, 0 <= ell <= ell_max.  P(1) of S
/// states comes from the Airy zeros and must agree with the solver to 1e-6.
[[nodiscard]] PDataset build_p_dataset(int n_max, int ell_max, const SolverConfig& cfg = {});

/// 100 (approx - exact) / |exact|.
[[nodiscard]] double percentage_error(double e_approx, double e_exact);

struct Table1Row {
  int n = 0;
  int ell = 0;
  double p0 = 0.0;
  double p1 = 0.0;
  double e_approx = 0.0;  ///< E^A at q = 1/2
  double e_exact = 0.0;   ///< solver E at q = 1/2
  double pct_error = 0.0;
};

/// Rows in the published order: all n for ell = 0, then ell = 1, ...
[[nodiscard]] std::vector<Table1Row> table1_rows(const PDataset& data, int n_max = 5, int ell_max = 4,
                                                 const SolverConfig& cfg = {});

// --- cache file -----------------------------------------------------------

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr std::string_view kDatasetHeader = "n,ell,p_m1,p_0,p_1,p_2,prov_m1,prov_0,prov_1,prov_2";

/// Identifies the inputs a cached dataset was built from.
[[nodiscard]] std::string dataset_cache_key(int n_max, int ell_max, const SolverConfig& cfg);

struct DatasetFile {
  PDataset data;
  std::optional<std::string> key;
};

/// CSV with a leading "# powerlog-pdata v1 key=..." comment, the header row,
/// and values at 12 significant digits.
void write_dataset_csv(std::ostream& os, const PDataset& data, std::string_view key = {});
[[nodiscard]] DatasetFile read_dataset_csv(std::istream& is);

}  // namespace powerlog
