#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "powerlog/interp.hpp"

namespace powerlog::cli {

/// Per-column acceptance tolerances for comparing recomputed reference-table rows
/// against the published (rounded) values.
struct GoldenTolerances {
  double p = 2e-5;
  double energy = 2e-5;
  double pct = 3e-3;  ///< percentage points
};

/// The reference table as published, one record per (n, ell).
[[nodiscard]] std::vector<Table1Row> parse_golden_csv(std::istream& is);
[[nodiscard]] std::vector<Table1Row> embedded_table1_golden();

struct GoldenMismatch {
  int n;
  int ell;
  std::string column;
  double computed;
  double published;
  double tolerance;
};

/// Column-by-column numeric comparison; rows are matched on (n, ell) and a
/// golden row missing from `computed` is reported under column "row".
[[nodiscard]] std::vector<GoldenMismatch> compare_with_golden(const std::vector<Table1Row>& computed,
                                                              const std::vector<Table1Row>& golden,
                                                              const GoldenTolerances& tol = {});

}  // namespace powerlog::cli
