#pragma once

#include "powerlog/potentials.hpp"

namespace powerlog {

/// The semiclassical number P of a level: E = min_{r>0} { P^2/r^2 + V(r) }.
class PValue {
 public:
  explicit PValue(double value);
  [[nodiscard]] double value() const noexcept { return value_; }
  friend auto operator<=>(const PValue&, const PValue&) = default;

 private:
  double value_;
};

struct EnvelopeMinimum {
  double r_star;
  double energy;
};

/// sgn(q) (q/2 + 1) (2 P^2 / |q|)^{q/(q+2)}.
[[nodiscard]] double energy_from_p_power(double q, PValue p);

/// Closed-form inverse of energy_from_p_power.
[[nodiscard]] PValue p_from_energy_power(double q, double e);

/// ln( sqrt(2e) P ).
[[nodiscard]] double energy_from_p_log(PValue p);

/// exp(E) / sqrt(2e).
[[nodiscard]] PValue p_from_energy_log(double e);

/// Dispatches on the family position: q == 0 means the logarithm.
[[nodiscard]] double energy_from_p(double q, PValue p);
[[nodiscard]] PValue p_from_energy(double q, double e);

/// Exact P for the Coulomb (q = -1) and oscillator (q = 2) endpoints:
/// n + ell and 2n + ell - 1/2.
[[nodiscard]] PValue exact_p(double q, QuantumNumbers qn);

/// Minimizes f(r) = P^2/r^2 + V(r) over r > 0 for a bare power or log spec.
/// The stationary point solves r^3 V'(r) = 2 P^2, whose left side is monotone
/// for every member of the family.
[[nodiscard]] EnvelopeMinimum minimize_envelope(PValue p, const PotentialSpec& spec);

}  // namespace powerlog
