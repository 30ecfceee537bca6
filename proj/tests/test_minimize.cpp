#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "powerlog/errors.hpp"
#include "powerlog/minimize.hpp"

using namespace powerlog;

TEST(BrentMinimize, Parabola) {
  const auto m = brent_minimize([](double x) { return (x - 1.25) * (x - 1.25) + 3.0; }, -4.0, 7.0);
  EXPECT_NEAR(m.x, 1.25, 1e-8);
  EXPECT_NEAR(m.value, 3.0, 1e-14);
}

TEST(BrentMinimize, NonSmoothMinimum) {
  const auto m = brent_minimize([](double x) { return std::abs(x - 0.3); }, -1.0, 2.0);
  EXPECT_NEAR(m.x, 0.3, 1e-8);
}

TEST(FindRoot, Cosine) {
  EXPECT_NEAR(find_root([](double x) { return std::cos(x); }, 0.0, 3.0), std::numbers::pi / 2, 1e-14);
}

TEST(FindRoot, NoSignChange) {
  EXPECT_THROW((void)find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NumericalError);
}
