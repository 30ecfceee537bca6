#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/oracles.hpp"
#include "powerlog/errors.hpp"
#include "powerlog/prep.hpp"
#include "powerlog/radial_solver.hpp"

using namespace powerlog;

namespace {
const double kSqrt2e = std::sqrt(2.0 * std::numbers::e);
constexpr double kPs[] = {0.5, 1.0, 5.0, 20.0};
constexpr double kQs[] = {-1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0};
}  // namespace

TEST(PValue, MustBePositive) {
  EXPECT_THROW(PValue(0.0), DomainError);
  EXPECT_THROW(PValue(-1.0), DomainError);
  EXPECT_THROW(PValue(std::nan("")), DomainError);
  EXPECT_EQ(PValue(2.5).value(), 2.5);
}

TEST(EnergyFromPPower, Examples) {
  EXPECT_NEAR(energy_from_p_power(2.0, PValue(1.5)), 3.0, 1e-14);
  EXPECT_NEAR(energy_from_p_power(-1.0, PValue(1.0)), -0.25, 1e-15);
  // mpmath at 30 digits.
  EXPECT_NEAR(energy_from_p_power(1.0, PValue(1.37608)), 2.3381033967878095, 1e-13);
  EXPECT_THROW((void)energy_from_p_power(0.0, PValue(1.0)), DomainError);
}

TEST(PFromEnergyPower, Examples) {
  EXPECT_NEAR(p_from_energy_power(2.0, 3.0).value(), 1.5, 1e-14);
  EXPECT_NEAR(p_from_energy_power(-1.0, -1.0 / 16.0).value(), 2.0, 1e-14);
  // E = 2.33811 is rounded; dP/dE = P / (3 E) here, so allow 1e-5.
  EXPECT_NEAR(p_from_energy_power(1.0, 2.33811).value(), 1.37608, 1e-5);
  EXPECT_NEAR(p_from_energy_power(1.0, 2.33810741045976703849).value(), 1.37608, 5e-6);
}

TEST(PFromEnergyPower, WrongSign) {
  EXPECT_THROW((void)p_from_energy_power(1.0, -0.5), DomainError);
  EXPECT_THROW((void)p_from_energy_power(-0.5, 0.5), DomainError);
  EXPECT_THROW((void)p_from_energy_power(0.0, 1.0), DomainError);
}

TEST(EnergyFromPLog, Examples) {
  EXPECT_NEAR(energy_from_p_log(PValue(1.0 / kSqrt2e)), 0.0, 1e-15);
  EXPECT_NEAR(energy_from_p_log(PValue(1.0 / std::sqrt(2.0))), 0.5, 1e-15);
  EXPECT_NEAR(energy_from_p_log(PValue(1.21867)), 1.04433369042978510, 1e-13);
}

TEST(PFromEnergyLog, Examples) {
  EXPECT_NEAR(p_from_energy_log(0.0).value(), 0.428881942480353398, 1e-15);
  EXPECT_NEAR(p_from_energy_log(0.5).value(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(p_from_energy_log(1.04433369042978510).value(), 1.21867, 1e-12);
}

TEST(Dispatch, ZeroExponentIsLog) {
  EXPECT_EQ(energy_from_p(0.0, PValue(2.0)), energy_from_p_log(PValue(2.0)));
  EXPECT_EQ(p_from_energy(0.0, 1.5).value(), p_from_energy_log(1.5).value());
  EXPECT_EQ(energy_from_p(0.5, PValue(2.0)), energy_from_p_power(0.5, PValue(2.0)));
}

TEST(ExactP, Examples) {
  EXPECT_EQ(exact_p(-1.0, QuantumNumbers(1, 0)).value(), 1.0);
  EXPECT_EQ(exact_p(2.0, QuantumNumbers(1, 0)).value(), 1.5);
  EXPECT_EQ(exact_p(2.0, QuantumNumbers(3, 2)).value(), 7.5);
  EXPECT_THROW((void)exact_p(1.0, QuantumNumbers(1, 0)), DomainError);
}

TEST(ExactP, ReproducesClosedFormSpectra) {
  for (int n = 1; n <= 5; ++n) {
    for (int ell = 0; ell <= 4; ++ell) {
      const QuantumNumbers qn(n, ell);
      EXPECT_DOUBLE_EQ(energy_from_p_power(-1.0, exact_p(-1.0, qn)), -0.25 / ((n + ell) * (n + ell)));
      EXPECT_DOUBLE_EQ(energy_from_p_power(2.0, exact_p(2.0, qn)), 4.0 * n + 2.0 * ell - 1.0);
    }
  }
}

TEST(Roundtrip, PowerAndLog) {
  for (double p : kPs) {
    for (double q : kQs) {
      const double back = p_from_energy_power(q, energy_from_p_power(q, PValue(p))).value();
      EXPECT_LE(std::abs(back - p), 1e-12 * p) << "q=" << q << " p=" << p;
    }
    const double back = p_from_energy_log(energy_from_p_log(PValue(p))).value();
    EXPECT_LE(std::abs(back - p), 1e-12 * p);
  }
}

TEST(Limit, SmallExponentsApproachPlusMinusOne) {
  for (double p : {1.0, 5.0}) {
    EXPECT_LT(std::abs(energy_from_p_power(1e-4, PValue(p)) - 1.0), 1e-3);
    EXPECT_LT(std::abs(energy_from_p_power(-1e-4, PValue(p)) + 1.0), 1e-3);
  }
}

TEST(Monotone, EnergyIncreasesWithP) {
  for (double q : kQs) {
    double prev = energy_from_p_power(q, PValue(0.1));
    for (double p = 0.15; p < 30.0; p *= 1.1) {
      const double e = energy_from_p_power(q, PValue(p));
      EXPECT_GT(e, prev) << q;
      prev = e;
    }
  }
}

TEST(MinimizeEnvelope, Examples) {
  const auto c = minimize_envelope(PValue(1.0), PotentialSpec::power(-1.0));
  EXPECT_NEAR(c.r_star, 2.0, 1e-9);
  EXPECT_NEAR(c.energy, -0.25, 1e-14);
  const auto h = minimize_envelope(PValue(1.5), PotentialSpec::power(2.0));
  EXPECT_NEAR(h.r_star, std::sqrt(1.5), 1e-9);
  EXPECT_NEAR(h.energy, 3.0, 1e-13);
  const auto l = minimize_envelope(PValue(1.21867), PotentialSpec::log());
  const auto scan = oracle::envelope_scan(1.21867, [](double r) { return std::log(r); });
  EXPECT_NEAR(l.energy, scan.energy, 1e-10);
  EXPECT_NEAR(l.r_star, scan.r_star, 1e-6);
  EXPECT_NEAR(l.energy, 1.044334, 2e-5);
}

TEST(MinimizeEnvelope, RequiresBareSpec) {
  EXPECT_THROW((void)minimize_envelope(PValue(1.0), PotentialSpec::power(1.0, 2.0, 1.0)), DomainError);
}

TEST(MinimizeEnvelope, AgreesWithClosedFormsAndScan) {
  for (double p : kPs) {
    for (double q : kQs) {
      const auto m = minimize_envelope(PValue(p), PotentialSpec::power(q));
      const double closed = energy_from_p_power(q, PValue(p));
      EXPECT_LE(std::abs(m.energy - closed), 1e-8 * std::max(1.0, std::abs(closed))) << q << " " << p;
      const double s = q > 0 ? 1.0 : -1.0;
      const auto scan = oracle::envelope_scan(p, [q, s](double r) { return s * std::pow(r, q); });
      EXPECT_LE(std::abs(m.energy - scan.energy), 1e-8 * std::max(1.0, std::abs(closed))) << q << " " << p;
    }
    const auto m = minimize_envelope(PValue(p), PotentialSpec::log());
    EXPECT_NEAR(m.energy, energy_from_p_log(PValue(p)), 1e-8);
  }
}

TEST(SolverConsistency, EndpointPValues) {
  for (int n = 1; n <= 3; ++n) {
    for (int ell = 0; ell <= 2; ++ell) {
      const QuantumNumbers qn(n, ell);
      const auto c = solve_eigenvalue(PotentialSpec::power(-1.0), qn);
      const auto h = solve_eigenvalue(PotentialSpec::power(2.0), qn);
      // dP/dE = P^3 / 2 at q = -1 and 1/2 at q = 2.
      const double pc = n + ell;
      EXPECT_NEAR(p_from_energy_power(-1.0, c.energy).value(), pc, 2e-6 * pc * pc * pc);
      EXPECT_NEAR(p_from_energy_power(2.0, h.energy).value(), exact_p(2.0, qn).value(), 1e-6);
    }
  }
}
