#include "powerlog/minimize.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "powerlog/errors.hpp"

namespace powerlog {

Minimum brent_minimize(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                       double abs_tol, int max_iterations) {
  constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt 5) / 2
  if (lo > hi) std::swap(lo, hi);

  double a = lo;
  double b = hi;
  double x = a + kGolden * (b - a);
  double w = x;
  double v = x;
  double fx = f(x);
  double fw = fx;
  double fv = fx;
  double d = 0.0;
  double e = 0.0;

  for (int iter = 0; iter < max_iterations; ++iter) {
    const double mid = 0.5 * (a + b);
    const double tol1 = rel_tol * std::abs(x) + abs_tol;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;

    bool golden = true;
    if (std::abs(e) > tol1) {
      // parabola through (v, fv), (w, fw), (x, fx)
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (mid >= x) ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (x >= mid) ? a - x : b - x;
      d = kGolden * e;
    }

    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx};
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                 int max_iterations) {
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw NumericalError("find_root: interval does not bracket a root");

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      d = b - a; e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * kEps * std::abs(b) + 0.5 * rel_tol * std::abs(b);
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  throw NumericalError("find_root: iteration limit reached");
}

}  // namespace powerlog
