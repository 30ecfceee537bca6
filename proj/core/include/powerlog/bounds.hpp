#pragma once

#include "powerlog/interp.hpp"
#include "powerlog/potentials.hpp"
#include "powerlog/radial_solver.hpp"

namespace powerlog {

/// Shape of g in V = g(U).
enum class Convexity { kConcave, kConvex, kLinear };

enum class BoundSide { kUpper, kLower, kExact };

/// Within the family, g is convex when the target sits at a larger exponent
/// than the base (the logarithm counts as exponent 0), concave when smaller.
[[nodiscard]] Convexity transformation_convexity(const PotentialSpec& base, const PotentialSpec& target);

/// Bound the spectrum of -Laplacian + coupling * target using tangents
/// alpha(t) base + beta(t) to target = g(base).  Both specs carry only the
/// kind; they must have mu = v = 1.
struct TangentBoundProblem {
  PotentialSpec base;
  PotentialSpec target;
  Convexity convexity;
  double coupling;

  /// Validates that `convexity` is the one implied by the exponents.
  TangentBoundProblem(PotentialSpec base, PotentialSpec target, Convexity convexity, double coupling = 1.0);
  /// Derives the convexity.
  static TangentBoundProblem make(PotentialSpec base, PotentialSpec target, double coupling = 1.0);
};

struct TangentBound {
  double energy;
  BoundSide side;
  double contact_radius;  ///< optimal t
  double base_energy;     ///< bare eigenvalue of the base used
};

/// Concave g: min_t { E^U(v alpha(t)) + v beta(t) } bounds from above.
/// Convex g: the max over t bounds from below.
[[nodiscard]] TangentBound tangent_bound(const TangentBoundProblem& problem, QuantumNumbers qn,
                                         const SolverConfig& cfg = {});

enum class NodeSet {
  kAll,             ///< every dataset node
  kExactEndpoints,  ///< only q = -1 and q = 2 (no dataset lookup)
};

struct EnergyInterval {
  double lower;
  double upper;
};

/// Brackets E(q_target) by evaluating the P -> E map at q_target with the P
/// values of the nearest nodes below and above (P increases with q, E
/// increases with P).  q_target = 0 denotes the logarithm.
[[nodiscard]] EnergyInterval monotone_p_bounds(double q_target, QuantumNumbers qn, const PDataset& data,
                                               NodeSet nodes = NodeSet::kAll);

}  // namespace powerlog
