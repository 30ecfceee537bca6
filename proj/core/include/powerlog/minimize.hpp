#pragma once

#include <functional>

namespace powerlog {

struct Minimum {
  double x;
  double value;
};

/// Brent's golden-section / parabolic minimization of a unimodal function on
/// [lo, hi].  Terminates when the bracket is below rel_tol * |x| + abs_tol.
[[nodiscard]] Minimum brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double rel_tol = 1e-10, double abs_tol = 1e-14,
                                     int max_iterations = 500);

/// Brent-Dekker root finder; requires f(lo) and f(hi) of opposite sign.
/// Throws NumericalError if the interval does not bracket a sign change.
[[nodiscard]] double find_root(const std::function<double(double)>& f, double lo, double hi,
                               double rel_tol = 1e-15, int max_iterations = 500);

}  // namespace powerlog
