#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/oracles.hpp"
#include "powerlog/airy.hpp"
#include "powerlog/bounds.hpp"
#include "powerlog/errors.hpp"

using namespace powerlog;

namespace {

const PDataset& shared_dataset() {
  static const PDataset data = build_p_dataset(5, 4);
  return data;
}

const double kLnSqrt2e = 0.5 * std::log(2.0 * std::numbers::e);

}  // namespace

TEST(Convexity, FromExponents) {
  EXPECT_EQ(transformation_convexity(PotentialSpec::power(-1.0), PotentialSpec::log()), Convexity::kConvex);
  EXPECT_EQ(transformation_convexity(PotentialSpec::power(1.0), PotentialSpec::log()), Convexity::kConcave);
  EXPECT_EQ(transformation_convexity(PotentialSpec::power(1.0), PotentialSpec::power(2.0)), Convexity::kConvex);
  EXPECT_EQ(transformation_convexity(PotentialSpec::power(2.0), PotentialSpec::power(0.5)), Convexity::kConcave);
  EXPECT_EQ(transformation_convexity(PotentialSpec::log(), PotentialSpec::power(0.5)), Convexity::kConvex);
  EXPECT_EQ(transformation_convexity(PotentialSpec::power(0.5), PotentialSpec::power(0.5)), Convexity::kLinear);
}

TEST(TangentBoundProblem, RejectsWrongConvexity) {
  EXPECT_THROW(TangentBoundProblem(PotentialSpec::power(1.0), PotentialSpec::log(), Convexity::kConvex),
               DomainError);
  EXPECT_THROW(TangentBoundProblem(PotentialSpec::power(1.0), PotentialSpec::log(), Convexity::kConcave, 0.0),
               DomainError);
  EXPECT_THROW(TangentBoundProblem(PotentialSpec::power(1.0, 2.0, 1.0), PotentialSpec::log(),
                                   Convexity::kConcave),
               DomainError);
}

TEST(TangentBound, CoulombToLogLowerBound) {
  const auto b = tangent_bound(TangentBoundProblem::make(PotentialSpec::power(-1.0), PotentialSpec::log()),
                               QuantumNumbers(1, 0));
  EXPECT_EQ(b.side, BoundSide::kLower);
  EXPECT_NEAR(b.energy, 0.846574, 1e-6);
  EXPECT_NEAR(b.energy, kLnSqrt2e, 1e-8);
}

TEST(TangentBound, LinearToLogUpperBound) {
  const auto b = tangent_bound(TangentBoundProblem::make(PotentialSpec::power(1.0), PotentialSpec::log()),
                               QuantumNumbers(1, 0));
  EXPECT_EQ(b.side, BoundSide::kUpper);
  EXPECT_NEAR(b.energy, 1.16581504258743674, 1e-9);
  // Independent: t^{-2/3} E + ln t - 1 scanned over t, E from Boost's zero.
  const double e10 = -oracle::airy_zero(1);
  const double scan =
      oracle::scan_extremum([e10](double t) { return std::pow(t, -2.0 / 3.0) * e10 + std::log(t) - 1.0; }, 1);
  EXPECT_NEAR(b.energy, scan, 1e-9);
}

TEST(TangentBound, LinearTransformationIsExact) {
  const auto b = tangent_bound(TangentBoundProblem::make(PotentialSpec::power(0.5), PotentialSpec::power(0.5)),
                               QuantumNumbers(2, 1));
  EXPECT_EQ(b.side, BoundSide::kExact);
  EXPECT_NEAR(b.energy, solve_eigenvalue(PotentialSpec::power(0.5), QuantumNumbers(2, 1)).energy, 1e-12);
}

TEST(TangentBound, CouplingFollowsScalingLaw) {
  const auto problem = TangentBoundProblem::make(PotentialSpec::power(-1.0), PotentialSpec::log(), 3.0);
  const auto b = tangent_bound(problem, QuantumNumbers(1, 0));
  EXPECT_NEAR(b.energy, scale_eigenvalue(PotentialSpec::log(1.0, 3.0), kLnSqrt2e), 1e-8);
}

TEST(TangentBound, PowerTargets) {
  // Oscillator base, q = 1 target: concave, upper bound.
  const QuantumNumbers qn(1, 0);
  const auto up = tangent_bound(TangentBoundProblem::make(PotentialSpec::power(2.0), PotentialSpec::power(1.0)), qn);
  EXPECT_EQ(up.side, BoundSide::kUpper);
  EXPECT_GE(up.energy, linear_s_state_energy(1));
  // Coulomb base, q = 1 target: convex, lower bound.
  const auto lo = tangent_bound(TangentBoundProblem::make(PotentialSpec::power(-1.0), PotentialSpec::power(1.0)), qn);
  EXPECT_EQ(lo.side, BoundSide::kLower);
  EXPECT_LE(lo.energy, linear_s_state_energy(1));
  // The tangent bound from an endpoint reproduces the envelope value at that endpoint's P.
  EXPECT_NEAR(up.energy, energy_from_p_power(1.0, exact_p(2.0, qn)), 1e-8);
  EXPECT_NEAR(lo.energy, energy_from_p_power(1.0, exact_p(-1.0, qn)), 1e-8);
}

TEST(TangentBound, Sidedness) {
  const auto upper = TangentBoundProblem::make(PotentialSpec::power(1.0), PotentialSpec::log());
  const auto lower = TangentBoundProblem::make(PotentialSpec::power(-1.0), PotentialSpec::log());
  for (int n = 1; n <= 3; ++n) {
    for (int ell = 0; ell <= 2; ++ell) {
      const QuantumNumbers qn(n, ell);
      const double exact = solve_eigenvalue(PotentialSpec::log(), qn).energy;
      EXPECT_GE(tangent_bound(upper, qn).energy, exact) << n << "," << ell;
      const double lo = tangent_bound(lower, qn).energy;
      EXPECT_LE(lo, exact) << n << "," << ell;
      EXPECT_NEAR(lo, energy_from_p_log(PValue(n + ell)), 1e-8);
    }
  }
}

TEST(MonotoneBounds, LogFromExactEndpoints) {
  const auto i = monotone_p_bounds(0.0, QuantumNumbers(1, 0), PDataset{}, NodeSet::kExactEndpoints);
  EXPECT_NEAR(i.lower, 0.846573590279972655, 1e-14);
  EXPECT_NEAR(i.upper, 1.25203869838813704, 1e-14);
  const double e = solve_eigenvalue(PotentialSpec::log(), QuantumNumbers(1, 0)).energy;
  EXPECT_LT(i.lower, e);
  EXPECT_GT(i.upper, e);
}

TEST(MonotoneBounds, NodeCases) {
  for (int n = 1; n <= 3; ++n) {
    const QuantumNumbers qn(n, 1);
    const auto c = monotone_p_bounds(-1.0, qn, shared_dataset());
    EXPECT_EQ(c.lower, c.upper);
    EXPECT_DOUBLE_EQ(c.lower, -0.25 / ((n + 1.0) * (n + 1.0)));
    const auto h = monotone_p_bounds(2.0, qn, shared_dataset(), NodeSet::kExactEndpoints);
    EXPECT_EQ(h.lower, h.upper);
    EXPECT_DOUBLE_EQ(h.lower, 4.0 * n + 1.0);
  }
}

TEST(MonotoneBounds, HalfFromInteriorNodes) {
  const auto i = monotone_p_bounds(0.5, QuantumNumbers(1, 0), shared_dataset());
  EXPECT_NEAR(i.lower, energy_from_p_power(0.5, PValue(1.21867)), 1e-4);
  EXPECT_NEAR(i.upper, energy_from_p_power(0.5, PValue(1.37608)), 1e-4);
  EXPECT_LT(i.lower, 1.83339);
  EXPECT_GT(i.upper, 1.83339);
}

TEST(MonotoneBounds, BracketSolverOnAllRows) {
  for (double q : {-0.5, 0.0, 0.5, 1.5}) {
    for (int ell = 0; ell <= 4; ++ell) {
      for (int n = 1; n <= 5; ++n) {
        const QuantumNumbers qn(n, ell);
        const double e = solve_eigenvalue(PotentialSpec::at_exponent(q), qn).energy;
        if (q == 0.0) {
          // q = 0 is a node: the interval is the stored log value itself.
          const auto node = monotone_p_bounds(q, qn, shared_dataset());
          EXPECT_NEAR(node.lower, e, 1e-12);
          EXPECT_EQ(node.lower, node.upper);
          const auto i = monotone_p_bounds(q, qn, shared_dataset(), NodeSet::kExactEndpoints);
          EXPECT_LT(i.lower, e) << n << "," << ell;
          EXPECT_GT(i.upper, e) << n << "," << ell;
          continue;
        }
        const auto i = monotone_p_bounds(q, qn, shared_dataset());
        EXPECT_LT(i.lower, e) << q << " " << n << "," << ell;
        EXPECT_GT(i.upper, e) << q << " " << n << "," << ell;
      }
    }
  }
}

TEST(MonotoneBounds, OutsideHull) {
  EXPECT_THROW((void)monotone_p_bounds(2.5, QuantumNumbers(1, 0), shared_dataset()), DomainError);
  EXPECT_THROW((void)monotone_p_bounds(-1.2, QuantumNumbers(1, 0), shared_dataset()), DomainError);
  EXPECT_THROW((void)monotone_p_bounds(0.5, QuantumNumbers(6, 0), shared_dataset()), LookupError);
}
