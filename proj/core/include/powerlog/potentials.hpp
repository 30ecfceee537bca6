#pragma once

#include <compare>
#include <string>
#include <variant>

namespace powerlog {

/// Pure power V(r) = sgn(q) r^q.
struct PowerLaw {
  double q;
  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};

/// V(r) = ln r.
struct Logarithm {
  friend bool operator==(const Logarithm&, const Logarithm&) = default;
};

using PotentialKind = std::variant<PowerLaw, Logarithm>;

/// One member of the power/log family together with the kinetic coefficient
/// mu and coupling v of the Hamiltonian -mu Laplacian + v V(r).
///
/// Power exponents are restricted to [-1, 2] without 0; q = 0 is represented
/// only by the logarithm.
class PotentialSpec {
 public:
  static PotentialSpec power(double q, double mu = 1.0, double v = 1.0);
  static PotentialSpec log(double mu = 1.0, double v = 1.0);
  /// Family member at position q: the logarithm for q == 0, else power(q).
  static PotentialSpec at_exponent(double q, double mu = 1.0, double v = 1.0);

  [[nodiscard]] const PotentialKind& kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_log() const noexcept { return std::holds_alternative<Logarithm>(kind_); }
  /// The power q, or 0 for the logarithm (its position in the family).
  [[nodiscard]] double exponent() const noexcept;
  [[nodiscard]] double mu() const noexcept { return mu_; }
  [[nodiscard]] double v() const noexcept { return v_; }
  [[nodiscard]] bool is_bare() const noexcept { return mu_ == 1.0 && v_ == 1.0; }

  /// Same kind with mu = v = 1.
  [[nodiscard]] PotentialSpec bare() const;

  /// "power(q=0.5)", "log", optionally with mu/v.
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  PotentialSpec(PotentialKind kind, double mu, double v) : kind_(kind), mu_(mu), v_(v) {}

  PotentialKind kind_;
  double mu_;
  double v_;
};

/// (n, ell): n >= 1 counts levels inside the ell subspace.
class QuantumNumbers {
 public:
  QuantumNumbers(int n, int ell);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int ell() const noexcept { return ell_; }
  [[nodiscard]] int degeneracy() const noexcept { return 2 * ell_ + 1; }

  friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_;
  int ell_;
};

[[nodiscard]] constexpr double sgn(double x) noexcept { return (x > 0.0) - (x < 0.0); }

/// v sgn(q) r^q or v ln r.
[[nodiscard]] double evaluate(const PotentialSpec& spec, double r);

/// dV/dr of evaluate().
[[nodiscard]] double derivative(const PotentialSpec& spec, double r);

/// mu ell(ell+1)/r^2 + V(r), the potential seen by the reduced radial function.
[[nodiscard]] double effective_potential(const PotentialSpec& spec, int ell, double r);

/// Maps an eigenvalue of the bare (mu = v = 1) problem to the eigenvalue of
/// -mu Laplacian + v V:  mu (v/mu)^{2/(2+q)} E  for powers,
/// v E - v/2 ln(v/mu) for the logarithm.
[[nodiscard]] double scale_eigenvalue(const PotentialSpec& spec, double bare_energy);

/// d(scaled)/d(bare); used to carry error estimates through scaling.
[[nodiscard]] double scale_factor(const PotentialSpec& spec);

}  // namespace powerlog
