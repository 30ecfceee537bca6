#pragma once

namespace powerlog {

/// Ai(x) for |x| <= 20, absolute accuracy ~1e-13 (Maclaurin series in
/// extended precision for |x| <= 8, asymptotic expansions beyond).
[[nodiscard]] double airy_ai(double x);

/// Ai'(x) on the same range.
[[nodiscard]] double airy_ai_prime(double x);

struct AiryZero {
  int index;
  double location;  ///< a_k < 0
};

/// k-th negative zero of Ai, 1 <= k <= 20, by Newton iteration from the
/// large-k asymptotic formula.
[[nodiscard]] AiryZero airy_zero(int k);

/// -a_n: the n-th S-state eigenvalue of -u'' + r u = E u, u(0) = 0.
[[nodiscard]] double linear_s_state_energy(int n);

}  // namespace powerlog
