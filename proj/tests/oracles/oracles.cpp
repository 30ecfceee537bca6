#include "oracles.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/airy.hpp>

#include <cmath>
#include <limits>

namespace oracle {
namespace {

Eigen::VectorXd dense_spectrum(const std::function<double(double)>& veff, double r_max, int points) {
  const double h = r_max / (points + 1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(points, points);
  for (int i = 0; i < points; ++i) {
    a(i, i) = 2.0 / (h * h) + veff((i + 1) * h);
    if (i + 1 < points) a(i, i + 1) = a(i + 1, i) = -1.0 / (h * h);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

std::vector<double> dense_levels(const std::function<double(double)>& veff, double r_max, int count,
                                 int base_points) {
  const Eigen::VectorXd e1 = dense_spectrum(veff, r_max, base_points);
  const Eigen::VectorXd e2 = dense_spectrum(veff, r_max, 2 * base_points + 1);
  const Eigen::VectorXd e3 = dense_spectrum(veff, r_max, 4 * base_points + 3);
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    const double r1 = (4.0 * e2(k) - e1(k)) / 3.0;
    const double r2 = (4.0 * e3(k) - e2(k)) / 3.0;
    out.push_back((16.0 * r2 - r1) / 15.0);
  }
  return out;
}

std::function<double(double)> bare_veff(double q, bool is_log, int ell) {
  const double cent = ell * (ell + 1.0);
  if (is_log) return [cent](double r) { return std::log(r) + cent / (r * r); };
  const double s = q > 0 ? 1.0 : -1.0;
  return [q, s, cent](double r) { return s * std::pow(r, q) + cent / (r * r); };
}

double airy_ai(double x) { return boost::math::airy_ai(x); }

double airy_zero(int k) { return boost::math::airy_ai_zero<double>(k); }

namespace {

// Repeated zoom: scan 2001 points, then shrink around the best point.
double zoom(const std::function<double(double)>& g, double lo, double hi) {
  for (int pass = 0; pass < 12; ++pass) {
    constexpr int kPoints = 2001;
    double best_x = lo;
    double best = std::numeric_limits<double>::infinity();
    const double step = (hi - lo) / (kPoints - 1);
    for (int i = 0; i < kPoints; ++i) {
      const double x = lo + i * step;
      const double y = g(x);
      if (y < best) {
        best = y;
        best_x = x;
      }
    }
    lo = best_x - 2.0 * step;
    hi = best_x + 2.0 * step;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EnvelopePoint envelope_scan(double p, const std::function<double(double)>& v) {
  auto f = [&](double s) {
    const double r = std::exp(s);
    return p * p / (r * r) + v(r);
  };
  const double s = zoom(f, -12.0, 12.0);
  return {std::exp(s), f(s)};
}

double scan_extremum(const std::function<double(double)>& f, int sign) {
  auto g = [&](double s) { return sign * f(std::exp(s)); };
  return f(std::exp(zoom(g, -12.0, 12.0)));
}

std::array<double, 4> vandermonde_cubic(const std::array<double, 4>& nodes, const std::array<double, 4>& values) {
  Eigen::Matrix4d m;
  Eigen::Vector4d rhs;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = std::pow(nodes[i], j);
    rhs(i) = values[i];
  }
  const Eigen::Vector4d c = m.fullPivLu().solve(rhs);
  return {c(0), c(1), c(2), c(3)};
}

}  // namespace oracle
