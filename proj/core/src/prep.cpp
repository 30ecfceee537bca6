#include "powerlog/prep.hpp"

#include <cmath>
#include <numbers>

#include "powerlog/errors.hpp"
#include "powerlog/minimize.hpp"

namespace powerlog {
namespace {

void check_power_exponent(double q) {
  if (!std::isfinite(q) || q < -1.0 || q > 2.0) throw DomainError("power exponent must lie in [-1, 2]");
  if (q == 0.0) throw DomainError("q = 0 has no power form; use the logarithmic converters");
}

// ln sqrt(2e) = (ln 2 + 1) / 2
constexpr double kLogSqrt2e = 0.5 * (std::numbers::ln2 + 1.0);

}  // namespace

PValue::PValue(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError("P must be a positive finite number");
}

double energy_from_p_power(double q, PValue p) {
  check_power_exponent(q);
  const double base = 2.0 * p.value() * p.value() / std::abs(q);
  return sgn(q) * (0.5 * q + 1.0) * std::pow(base, q / (q + 2.0));
}

PValue p_from_energy_power(double q, double e) {
  check_power_exponent(q);
  if (!std::isfinite(e) || e == 0.0 || sgn(e) != sgn(q)) {
    throw DomainError("energy sign must match sgn(q) for the power P-representation");
  }
  // |e| / (q/2 + 1) = (2 P^2/|q|)^{q/(q+2)}
  const double scaled = std::abs(e) / (0.5 * q + 1.0);
  const double base = std::pow(scaled, (q + 2.0) / q);
  return PValue(std::sqrt(0.5 * std::abs(q) * base));
}

double energy_from_p_log(PValue p) { return kLogSqrt2e + std::log(p.value()); }

PValue p_from_energy_log(double e) {
  if (!std::isfinite(e)) throw DomainError("energy must be finite");
  return PValue(std::exp(e - kLogSqrt2e));
}

double energy_from_p(double q, PValue p) {
  return q == 0.0 ? energy_from_p_log(p) : energy_from_p_power(q, p);
}

PValue p_from_energy(double q, double e) {
  return q == 0.0 ? p_from_energy_log(e) : p_from_energy_power(q, e);
}

PValue exact_p(double q, QuantumNumbers qn) {
  if (q == -1.0) return PValue(qn.n() + qn.ell());
  if (q == 2.0) return PValue(2.0 * qn.n() + qn.ell() - 0.5);
  throw DomainError("exact P values are known only at q = -1 and q = 2");
}

EnvelopeMinimum minimize_envelope(PValue p, const PotentialSpec& spec) {
  if (!spec.is_bare()) throw DomainError("minimize_envelope expects mu = v = 1; rescale the energy instead");
  const double p2 = p.value() * p.value();
  const auto objective = [&](double r) { return p2 / (r * r) + evaluate(spec, r); };
  // r^3 f'(r) = r^3 V'(r) - 2 P^2; increasing in r
  const auto stationarity = [&](double r) { return r * r * r * derivative(spec, r) - 2.0 * p2; };

  double lo = 1.0;
  double hi = 1.0;
  for (int i = 0; stationarity(lo) >= 0.0; ++i) {
    if (i > 2000) throw NumericalError("minimize_envelope: lower bracket not found");
    lo *= 0.5;
  }
  for (int i = 0; stationarity(hi) <= 0.0; ++i) {
    if (i > 2000) throw NumericalError("minimize_envelope: upper bracket not found");
    hi *= 2.0;
  }

  // f is unimodal on the bracket; minimize in log r, then settle the
  // stationary point to full precision inside the final Brent interval.
  const auto in_log = [&](double s) { return objective(std::exp(s)); };
  const Minimum coarse = brent_minimize(in_log, std::log(lo), std::log(hi), 1e-10, 1e-12);
  double r_star = std::exp(coarse.x);
  const double width = 1e-6 * r_star;
  const double a = std::max(lo, r_star - width);
  const double b = std::min(hi, r_star + width);
  if (stationarity(a) < 0.0 && stationarity(b) > 0.0) r_star = find_root(stationarity, a, b);
  else r_star = find_root(stationarity, lo, hi);
  return {r_star, objective(r_star)};
}

}  // namespace powerlog
