#include "powerlog/bounds.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "powerlog/errors.hpp"
#include "powerlog/minimize.hpp"
#include "powerlog/prep.hpp"

namespace powerlog {
namespace {

constexpr double kLogTMin = -15.0;
constexpr double kLogTMax = 15.0;
constexpr double kLogTStep = 0.05;

std::string_view convexity_name(Convexity c) {
  switch (c) {
    case Convexity::kConcave: return "concave";
    case Convexity::kConvex: return "convex";
    case Convexity::kLinear: return "linear";
  }
  return "?";
}

}  // namespace

Convexity transformation_convexity(const PotentialSpec& base, const PotentialSpec& target) {
  const double qb = base.exponent();
  const double qt = target.exponent();
  if (qt > qb) return Convexity::kConvex;
  if (qt < qb) return Convexity::kConcave;
  return Convexity::kLinear;
}

TangentBoundProblem::TangentBoundProblem(PotentialSpec base_, PotentialSpec target_, Convexity convexity_,
                                         double coupling_)
    : base(base_), target(target_), convexity(convexity_), coupling(coupling_) {
  if (!base.is_bare() || !target.is_bare()) {
    throw DomainError("tangent bound: base and target must have mu = v = 1; pass the coupling separately");
  }
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw DomainError("tangent bound: coupling must be positive");
  const Convexity implied = transformation_convexity(base, target);
  if (implied != convexity) {
    throw DomainError("tangent bound: " + target.describe() + " is a " + std::string(convexity_name(implied)) +
                      " function of " + base.describe() + ", not " + std::string(convexity_name(convexity)));
  }
}

TangentBoundProblem TangentBoundProblem::make(PotentialSpec base, PotentialSpec target, double coupling) {
  return TangentBoundProblem(base, target, transformation_convexity(base, target), coupling);
}

TangentBound tangent_bound(const TangentBoundProblem& problem, QuantumNumbers qn, const SolverConfig& cfg) {
  const double base_energy = reference_energy(problem.base, qn, cfg).energy;
  const double v = problem.coupling;
  if (problem.convexity == Convexity::kLinear) {
    return {scale_eigenvalue(PotentialSpec::at_exponent(problem.base.exponent(), 1.0, v), base_energy),
            BoundSide::kExact, 1.0, base_energy};
  }

  const double qb = problem.base.exponent();
  // tangent at contact radius t: alpha = V'(t)/U'(t), beta = V(t) - alpha U(t)
  const auto bound_at = [&](double log_t) {
    const double t = std::exp(log_t);
    const double alpha = derivative(problem.target, t) / derivative(problem.base, t);
    const double beta = evaluate(problem.target, t) - alpha * evaluate(problem.base, t);
    const PotentialSpec scaled = PotentialSpec::at_exponent(qb, 1.0, v * alpha);
    return scale_eigenvalue(scaled, base_energy) + v * beta;
  };
  const bool upper = problem.convexity == Convexity::kConcave;
  // minimize the objective; for the convex case that is -bound
  const auto objective = [&](double log_t) {
    const double b = bound_at(log_t);
    if (!std::isfinite(b)) return std::numeric_limits<double>::infinity();
    return upper ? b : -b;
  };

  const int steps = static_cast<int>(std::lround((kLogTMax - kLogTMin) / kLogTStep));
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= steps; ++i) {
    const double value = objective(kLogTMin + i * kLogTStep);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  if (best == 0 || best == steps) {
    throw NumericalError("tangent bound: optimum over the contact point t not bracketed in [e^-15, e^15]");
  }
  const double center = kLogTMin + best * kLogTStep;
  const Minimum m = brent_minimize(objective, center - kLogTStep, center + kLogTStep, 1e-10, 1e-12);
  const double energy = upper ? m.value : -m.value;
  return {energy, upper ? BoundSide::kUpper : BoundSide::kLower, std::exp(m.x), base_energy};
}

EnergyInterval monotone_p_bounds(double q_target, QuantumNumbers qn, const PDataset& data, NodeSet nodes) {
  if (!(q_target >= -1.0 && q_target <= 2.0)) {
    throw DomainError("monotone bounds: q_target must lie within the node hull [-1, 2]");
  }
  std::vector<std::pair<double, double>> points;  // (q, P)
  if (nodes == NodeSet::kExactEndpoints) {
    points = {{-1.0, exact_p(-1.0, qn).value()}, {2.0, exact_p(2.0, qn).value()}};
  } else {
    const NodeValues& row = data.at(qn);
    for (std::size_t i = 0; i < kNodes.size(); ++i) points.emplace_back(kNodes[i], row.p[i]);
  }

  const std::pair<double, double>* below = nullptr;
  const std::pair<double, double>* above = nullptr;
  for (const auto& pt : points) {
    if (pt.first <= q_target) below = &pt;
    if (pt.first >= q_target && above == nullptr) above = &pt;
  }
  const double lower = energy_from_p(q_target, PValue(below->second));
  const double upper = energy_from_p(q_target, PValue(above->second));
  return {lower, upper};
}

}  // namespace powerlog
