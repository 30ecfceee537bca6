#include <gtest/gtest.h>

#include <cmath>

#include "powerlog/errors.hpp"
#include "powerlog/potentials.hpp"

using namespace powerlog;

TEST(PotentialSpec, RejectsExponentsOutsideRange) {
  EXPECT_THROW((void)PotentialSpec::power(0.0), DomainError);
  EXPECT_THROW((void)PotentialSpec::power(2.5), DomainError);
  EXPECT_THROW((void)PotentialSpec::power(-1.01), DomainError);
  EXPECT_THROW((void)PotentialSpec::power(std::nan("")), DomainError);
  EXPECT_NO_THROW((void)PotentialSpec::power(-1.0));
  EXPECT_NO_THROW((void)PotentialSpec::power(2.0));
}

TEST(PotentialSpec, RejectsNonPositiveCoefficients) {
  EXPECT_THROW((void)PotentialSpec::power(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW((void)PotentialSpec::power(1.0, 1.0, -2.0), DomainError);
  EXPECT_THROW((void)PotentialSpec::log(-1.0, 1.0), DomainError);
}

TEST(PotentialSpec, ZeroExponentMeansLog) {
  EXPECT_TRUE(PotentialSpec::at_exponent(0.0).is_log());
  EXPECT_FALSE(PotentialSpec::at_exponent(0.5).is_log());
  EXPECT_EQ(PotentialSpec::log().exponent(), 0.0);
}

TEST(PotentialSpec, BareDropsCoefficients) {
  const auto s = PotentialSpec::power(1.0, 2.0, 3.0);
  EXPECT_FALSE(s.is_bare());
  EXPECT_TRUE(s.bare().is_bare());
  EXPECT_EQ(s.bare(), PotentialSpec::power(1.0));
}

TEST(QuantumNumbers, Validation) {
  EXPECT_THROW(QuantumNumbers(0, 0), DomainError);
  EXPECT_THROW(QuantumNumbers(1, -1), DomainError);
  EXPECT_EQ(QuantumNumbers(3, 2).degeneracy(), 5);
  EXPECT_EQ(QuantumNumbers(1, 0).degeneracy(), 1);
}

TEST(Evaluate, Examples) {
  EXPECT_DOUBLE_EQ(evaluate(PotentialSpec::power(2.0), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(evaluate(PotentialSpec::power(-1.0), 2.0), -0.5);
  EXPECT_DOUBLE_EQ(evaluate(PotentialSpec::log(), 1.0), 0.0);
  EXPECT_DOUBLE_EQ(evaluate(PotentialSpec::power(1.0, 1.0, 3.0), 2.0), 6.0);
}

TEST(Evaluate, NonPositiveRadius) {
  EXPECT_THROW((void)evaluate(PotentialSpec::log(), 0.0), DomainError);
  EXPECT_THROW((void)evaluate(PotentialSpec::power(1.0), -1.0), DomainError);
  EXPECT_THROW((void)effective_potential(PotentialSpec::power(1.0), 0, 0.0), DomainError);
}

TEST(Evaluate, DerivativeMatchesDifferenceQuotient) {
  for (double q : {-1.0, -0.3, 0.5, 1.0, 2.0}) {
    const auto s = PotentialSpec::power(q);
    const double r = 1.7;
    const double h = 1e-6;
    EXPECT_NEAR(derivative(s, r), (evaluate(s, r + h) - evaluate(s, r - h)) / (2 * h), 1e-7) << q;
  }
  EXPECT_NEAR(derivative(PotentialSpec::log(), 4.0), 0.25, 1e-15);
}

TEST(EffectivePotential, Examples) {
  EXPECT_DOUBLE_EQ(effective_potential(PotentialSpec::power(2.0), 0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(effective_potential(PotentialSpec::log(), 1, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(effective_potential(PotentialSpec::power(-1.0), 1, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(effective_potential(PotentialSpec::power(2.0, 2.0, 1.0), 1, 1.0), 5.0);
}

TEST(ScaleEigenvalue, Examples) {
  EXPECT_DOUBLE_EQ(scale_eigenvalue(PotentialSpec::power(2.0), 3.0), 3.0);
  EXPECT_NEAR(scale_eigenvalue(PotentialSpec::power(2.0, 1.0, 4.0), 3.0), 6.0, 1e-14);
  // 2 E - ln 2 at the given E.
  EXPECT_NEAR(scale_eigenvalue(PotentialSpec::log(1.0, 2.0), 1.04441), 2 * 1.04441 - std::log(2.0), 1e-14);
  EXPECT_NEAR(scale_eigenvalue(PotentialSpec::log(1.0, 2.0), 1.04441), 1.39567, 5e-6);
}

TEST(ScaleEigenvalue, UnitCoefficientsAreIdentity) {
  for (double q : {-1.0, -0.5, 0.5, 1.0, 2.0}) {
    for (double e : {-3.0, 0.1, 7.25}) EXPECT_EQ(scale_eigenvalue(PotentialSpec::power(q), e), e);
  }
  EXPECT_EQ(scale_eigenvalue(PotentialSpec::log(), 1.25), 1.25);
}

TEST(ScaleEigenvalue, ComposesWithBareScaling) {
  for (double q : {-1.0, 0.5, 2.0}) {
    const auto s = PotentialSpec::power(q, 2.0, 3.0);
    const double once = scale_eigenvalue(s, 1.3);
    EXPECT_DOUBLE_EQ(scale_eigenvalue(s.bare(), once), once);
    EXPECT_NEAR(once, 2.0 * std::pow(1.5, 2.0 / (2.0 + q)) * 1.3, 1e-13);
  }
  const auto l = PotentialSpec::log(2.0, 3.0);
  EXPECT_NEAR(scale_eigenvalue(l, 1.3), 3.0 * 1.3 - 1.5 * std::log(1.5), 1e-14);
}
