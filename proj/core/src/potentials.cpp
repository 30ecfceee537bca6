#include "powerlog/potentials.hpp"

#include <cmath>
#include <sstream>

#include "powerlog/errors.hpp"

namespace powerlog {
namespace {

void check_coefficients(double mu, double v) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("kinetic coefficient mu must be positive");
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("coupling v must be positive");
}

void check_radius(double r) {
  if (!(r > 0.0)) throw DomainError("potential evaluated at non-positive radius");
}

}  // namespace

PotentialSpec PotentialSpec::power(double q, double mu, double v) {
  if (!std::isfinite(q) || q < -1.0 || q > 2.0) {
    throw DomainError("power exponent must lie in [-1, 2]");
  }
  if (q == 0.0) throw DomainError("q = 0 is not a power; use the logarithmic potential");
  check_coefficients(mu, v);
  return PotentialSpec(PowerLaw{q}, mu, v);
}

PotentialSpec PotentialSpec::log(double mu, double v) {
  check_coefficients(mu, v);
  return PotentialSpec(Logarithm{}, mu, v);
}

PotentialSpec PotentialSpec::at_exponent(double q, double mu, double v) {
  return q == 0.0 ? log(mu, v) : power(q, mu, v);
}

double PotentialSpec::exponent() const noexcept {
  if (const auto* p = std::get_if<PowerLaw>(&kind_)) return p->q;
  return 0.0;
}

PotentialSpec PotentialSpec::bare() const { return PotentialSpec(kind_, 1.0, 1.0); }

std::string PotentialSpec::describe() const {
  std::ostringstream os;
  if (is_log()) {
    os << "log";
  } else {
    os << "power(q=" << exponent() << ")";
  }
  if (!is_bare()) os << "[mu=" << mu_ << ",v=" << v_ << "]";
  return os.str();
}

QuantumNumbers::QuantumNumbers(int n, int ell) : n_(n), ell_(ell) {
  if (n < 1) throw DomainError("quantum number n must be >= 1");
  if (ell < 0) throw DomainError("angular momentum ell must be >= 0");
}

double evaluate(const PotentialSpec& spec, double r) {
  check_radius(r);
  if (spec.is_log()) return spec.v() * std::log(r);
  const double q = spec.exponent();
  return spec.v() * sgn(q) * std::pow(r, q);
}

double derivative(const PotentialSpec& spec, double r) {
  check_radius(r);
  if (spec.is_log()) return spec.v() / r;
  const double q = spec.exponent();
  return spec.v() * std::abs(q) * std::pow(r, q - 1.0);
}

double effective_potential(const PotentialSpec& spec, int ell, double r) {
  if (ell < 0) throw DomainError("angular momentum ell must be >= 0");
  check_radius(r);
  const double l = ell;
  return spec.mu() * l * (l + 1.0) / (r * r) + evaluate(spec, r);
}

double scale_factor(const PotentialSpec& spec) {
  if (spec.is_log()) return spec.v();
  const double q = spec.exponent();
  return spec.mu() * std::pow(spec.v() / spec.mu(), 2.0 / (2.0 + q));
}

double scale_eigenvalue(const PotentialSpec& spec, double bare_energy) {
  if (spec.is_log()) {
    return spec.v() * bare_energy - 0.5 * spec.v() * std::log(spec.v() / spec.mu());
  }
  return scale_factor(spec) * bare_energy;
}

}  // namespace powerlog
