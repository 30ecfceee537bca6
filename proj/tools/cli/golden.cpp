#include "cli/golden.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "golden_data.hpp"
#include "powerlog/errors.hpp"

namespace powerlog::cli {

std::vector<Table1Row> parse_golden_csv(std::istream& is) {
  std::vector<Table1Row> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      if (line != "n,ell,P0,P1,E_approx_half,E_exact_half,pct_error") {
        throw DomainError("golden file: unexpected header '" + line + "'");
      }
      header = false;
      continue;
    }
    std::istringstream fields(line);
    std::string f;
    std::vector<double> v;
    while (std::getline(fields, f, ',')) v.push_back(std::stod(f));
    if (v.size() != 7) throw DomainError("golden file: expected 7 columns in '" + line + "'");
    rows.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], v[3], v[4], v[5], v[6]});
  }
  return rows;
}

std::vector<Table1Row> embedded_table1_golden() {
  std::istringstream is(generated::kTable1GoldenCsv);
  return parse_golden_csv(is);
}

std::vector<GoldenMismatch> compare_with_golden(const std::vector<Table1Row>& computed,
                                                const std::vector<Table1Row>& golden,
                                                const GoldenTolerances& tol) {
  std::vector<GoldenMismatch> out;
  for (const Table1Row& g : golden) {
    const Table1Row* c = nullptr;
    for (const auto& row : computed) {
      if (row.n == g.n && row.ell == g.ell) c = &row;
    }
    if (c == nullptr) {
      out.push_back({g.n, g.ell, "row", NAN, NAN, 0.0});
      continue;
    }
    const auto check = [&](const char* column, double computed_value, double published, double limit) {
      if (!(std::abs(computed_value - published) <= limit)) {
        out.push_back({g.n, g.ell, column, computed_value, published, limit});
      }
    };
    check("P0", c->p0, g.p0, tol.p);
    check("P1", c->p1, g.p1, tol.p);
    check("E_approx_half", c->e_approx, g.e_approx, tol.energy);
    check("E_exact_half", c->e_exact, g.e_exact, tol.energy);
    check("pct_error", c->pct_error, g.pct_error, tol.pct);
  }
  return out;
}

}  // namespace powerlog::cli
