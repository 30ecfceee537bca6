#include "powerlog/interp.hpp"

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "powerlog/detail/parallel.hpp"
#include "powerlog/airy.hpp"
#include "powerlog/errors.hpp"
#include "powerlog/format.hpp"

namespace powerlog {
namespace {

constexpr double kAirySolverAgreement = 1e-6;

std::string level_name(QuantumNumbers qn) {
  return "(n=" + std::to_string(qn.n()) + ", ell=" + std::to_string(qn.ell()) + ")";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("dataset file: not a number: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("dataset file: trailing characters in '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_double(s);
  if (v != std::floor(v)) throw DomainError("dataset file: expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

}  // namespace

CubicCoeffs fit_cubic(PValue p_m1, PValue p_0, PValue p_1, PValue p_2) {
  const double m = p_m1.value();
  const double z = p_0.value();
  const double o = p_1.value();
  const double t = p_2.value();
  return {
      z,
      -m / 3.0 - z / 2.0 + o - t / 6.0,
      m / 2.0 - z + o / 2.0,
      -m / 6.0 + z / 2.0 - o / 2.0 + t / 6.0,
  };
}

PValue p_interpolated(const CubicCoeffs& coeffs, double q) {
  if (!(q >= -1.0 && q <= 2.0)) throw DomainError("interpolation is defined only for -1 <= q <= 2");
  const double p = coeffs(q);
  if (!(p > 0.0)) throw DomainError("interpolated P is not positive; node data are inconsistent");
  return PValue(p);
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::kExactFormula: return "exact-formula";
    case Provenance::kAiry: return "airy";
    case Provenance::kSolver: return "solver";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "exact-formula") return Provenance::kExactFormula;
  if (s == "airy") return Provenance::kAiry;
  if (s == "solver") return Provenance::kSolver;
  throw DomainError("unknown provenance '" + std::string(s) + "'");
}

CubicCoeffs NodeValues::cubic() const { return fit_cubic(PValue(p[0]), PValue(p[1]), PValue(p[2]), PValue(p[3])); }

void PDataset::insert(QuantumNumbers qn, const NodeValues& values) {
  for (std::size_t i = 0; i + 1 < values.p.size(); ++i) {
    if (!(values.p[i] < values.p[i + 1])) {
      throw ConsistencyError("P values are not increasing across the nodes for " + level_name(qn));
    }
  }
  if (values.provenance[0] != Provenance::kExactFormula || values.provenance[3] != Provenance::kExactFormula ||
      values.p[0] != exact_p(-1.0, qn).value() || values.p[3] != exact_p(2.0, qn).value()) {
    throw ConsistencyError("endpoint P values must be the exact formulas for " + level_name(qn));
  }
  rows_.insert_or_assign(qn, values);
}

const NodeValues& PDataset::at(QuantumNumbers qn) const {
  const auto it = rows_.find(qn);
  if (it == rows_.end()) throw LookupError("P dataset has no row " + level_name(qn));
  return it->second;
}

bool PDataset::covers(int n_max, int ell_max) const {
  for (int ell = 0; ell <= ell_max; ++ell) {
    for (int n = 1; n <= n_max; ++n) {
      if (!contains(QuantumNumbers(n, ell))) return false;
    }
  }
  return true;
}

ReferenceEnergy reference_energy(const PotentialSpec& spec, QuantumNumbers qn, const SolverConfig& cfg) {
  if (!spec.is_bare()) throw DomainError("reference_energy expects a bare (mu = v = 1) potential");
  const double q = spec.exponent();
  if (!spec.is_log() && (q == -1.0 || q == 2.0)) {
    return {energy_from_p_power(q, exact_p(q, qn)), Provenance::kExactFormula, 0.0};
  }
  if (!spec.is_log() && q == 1.0 && qn.ell() == 0) {
    return {linear_s_state_energy(qn.n()), Provenance::kAiry, 0.0};
  }
  const Eigenresult r = solve_eigenvalue(spec, qn, cfg);
  return {r.energy, Provenance::kSolver, r.estimated_error};
}

double approx_energy(QuantumNumbers qn, double q, const PDataset& data) {
  const PValue p = p_interpolated(data.at(qn).cubic(), q);
  return energy_from_p(q, p);
}

PDataset build_p_dataset(int n_max, int ell_max, const SolverConfig& cfg) {
  if (n_max < 1 || ell_max < 0) throw DomainError("build_p_dataset: need n_max >= 1 and ell_max >= 0");
  std::vector<QuantumNumbers> levels;
  for (int ell = 0; ell <= ell_max; ++ell) {
    for (int n = 1; n <= n_max; ++n) levels.emplace_back(n, ell);
  }
  std::vector<NodeValues> values(levels.size());
  const PotentialSpec log_spec = PotentialSpec::log();
  const PotentialSpec linear = PotentialSpec::power(1.0);

  detail::parallel_for(levels.size(), [&](std::size_t i) {
    const QuantumNumbers qn = levels[i];
    NodeValues& row = values[i];
    row.p[0] = exact_p(-1.0, qn).value();
    row.p[3] = exact_p(2.0, qn).value();
    row.provenance[0] = row.provenance[3] = Provenance::kExactFormula;

    row.p[1] = p_from_energy_log(solve_eigenvalue(log_spec, qn, cfg).energy).value();
    row.provenance[1] = Provenance::kSolver;

    const double solved = solve_eigenvalue(linear, qn, cfg).energy;
    if (qn.ell() == 0) {
      const double airy = linear_s_state_energy(qn.n());
      if (std::abs(airy - solved) > kAirySolverAgreement) {
        std::ostringstream os;
        os << "linear S-state " << level_name(qn) << ": solver " << solved << " disagrees with Airy value "
           << airy;
        throw ConsistencyError(os.str());
      }
      row.p[2] = p_from_energy_power(1.0, airy).value();
      row.provenance[2] = Provenance::kAiry;
    } else {
      row.p[2] = p_from_energy_power(1.0, solved).value();
      row.provenance[2] = Provenance::kSolver;
    }
  });

  PDataset data;
  for (std::size_t i = 0; i < levels.size(); ++i) data.insert(levels[i], values[i]);
  return data;
}

double percentage_error(double e_approx, double e_exact) {
  if (e_exact == 0.0) throw DomainError("percentage error undefined for a zero reference energy");
  return 100.0 * (e_approx - e_exact) / std::abs(e_exact);
}

std::vector<Table1Row> table1_rows(const PDataset& data, int n_max, int ell_max, const SolverConfig& cfg) {
  std::vector<QuantumNumbers> levels;
  for (int ell = 0; ell <= ell_max; ++ell) {
    for (int n = 1; n <= n_max; ++n) levels.emplace_back(n, ell);
  }
  std::vector<Table1Row> rows(levels.size());
  const PotentialSpec half = PotentialSpec::power(0.5);
  detail::parallel_for(levels.size(), [&](std::size_t i) {
    const QuantumNumbers qn = levels[i];
    const NodeValues& nodes = data.at(qn);
    Table1Row& row = rows[i];
    row.n = qn.n();
    row.ell = qn.ell();
    row.p0 = nodes.p[1];
    row.p1 = nodes.p[2];
    row.e_approx = approx_energy(qn, 0.5, data);
    row.e_exact = solve_eigenvalue(half, qn, cfg).energy;
    row.pct_error = percentage_error(row.e_approx, row.e_exact);
  });
  return rows;
}

std::string dataset_cache_key(int n_max, int ell_max, const SolverConfig& cfg) {
  std::ostringstream os;
  os << "n_max=" << n_max << ";ell_max=" << ell_max << ";grid=" << cfg.grid_points
     << ";tol=" << format_significant(cfg.tolerance, 17) << ";richardson=" << cfg.richardson
     << ";refine=" << cfg.max_refinements
     << ";r_max=" << (cfg.r_max ? format_significant(*cfg.r_max, 17) : std::string("auto"));
  // FNV-1a
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : os.str()) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream key;
  key << "n" << n_max << "l" << ell_max << "-" << std::hex << hash;
  return key.str();
}

void write_dataset_csv(std::ostream& os, const PDataset& data, std::string_view key) {
  os << "# powerlog-pdata v" << kDatasetFormatVersion;
  if (!key.empty()) os << " key=" << key;
  os << '\n' << kDatasetHeader << '\n';
  for (const auto& [qn, row] : data.rows()) {
    os << qn.n() << ',' << qn.ell();
    for (double p : row.p) os << ',' << format_significant(p, 12);
    for (Provenance prov : row.provenance) os << ',' << to_string(prov);
    os << '\n';
  }
}

DatasetFile read_dataset_csv(std::istream& is) {
  DatasetFile file;
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream meta(line.substr(1));
      std::string word;
      while (meta >> word) {
        const bool is_version = word.size() > 1 && word[0] == 'v' &&
                                word.find_first_not_of("0123456789", 1) == std::string::npos;
        if (is_version && word != "v" + std::to_string(kDatasetFormatVersion)) {
          throw DomainError("dataset file: unsupported format version " + word);
        }
        if (word.rfind("key=", 0) == 0) file.key = word.substr(4);
      }
      continue;
    }
    if (!header_seen) {
      if (line != kDatasetHeader) throw DomainError("dataset file: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 10) {
      throw DomainError("dataset file line " + std::to_string(line_no) + ": expected 10 fields");
    }
    const QuantumNumbers qn(parse_int(fields[0]), parse_int(fields[1]));
    NodeValues row;
    for (std::size_t i = 0; i < 4; ++i) {
      row.p[i] = parse_double(fields[2 + i]);
      row.provenance[i] = provenance_from_string(fields[6 + i]);
    }
    file.data.insert(qn, row);
  }
  if (!header_seen) throw DomainError("dataset file: missing header");
  return file;
}

}  // namespace powerlog
