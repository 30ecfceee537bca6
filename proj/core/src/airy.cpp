#include "powerlog/airy.hpp"

#include <cmath>
#include <numbers>

#include "powerlog/errors.hpp"

namespace powerlog {
namespace {

constexpr double kMaxArgument = 20.0;
constexpr double kSeriesLimit = 8.0;
constexpr int kMaxZeroIndex = 20;

// Ai(0) = 3^{-2/3} / Gamma(2/3),  -Ai'(0) = 3^{-1/3} / Gamma(1/3)
constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kMinusAiPrime0 = 0.258819403792806798405183560189203963L;

struct Value {
  double ai;
  double ai_prime;
};

// Ai = c1 f - c2 g with f = sum 3^k (1/3)_k x^{3k}/(3k)!, g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!.
// Long double keeps the cancellation loss at |x| = 8 (terms ~e^15) well below 1e-12.
Value series(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f = 1.0L;
  long double g = x;
  long double df = 0.0L;
  long double dg = 1.0L;
  long double tf = 1.0L;
  long double tg = x;
  long double tdf = x * x / 2.0L;
  long double tdg = 1.0L;
  df = tdf;
  for (int k = 1; k < 200; ++k) {
    const long double kk = k;
    tf *= x3 / ((3.0L * kk - 1.0L) * (3.0L * kk));
    tg *= x3 / ((3.0L * kk) * (3.0L * kk + 1.0L));
    tdg *= x3 / ((3.0L * kk - 2.0L) * (3.0L * kk));
    if (k >= 2) {
      tdf *= x3 / ((3.0L * kk - 1.0L) * (3.0L * kk - 3.0L));
      df += tdf;
    }
    f += tf;
    g += tg;
    dg += tdg;
    const long double scale = std::fabs(f) + std::fabs(g) + std::fabs(df) + std::fabs(dg);
    if (std::fabs(tf) + std::fabs(tg) + std::fabs(tdf) + std::fabs(tdg) < 1e-22L * scale) break;
  }
  return {static_cast<double>(kAi0 * f - kMinusAiPrime0 * g),
          static_cast<double>(kAi0 * df - kMinusAiPrime0 * dg)};
}

// Coefficients u_k, v_k of the large-argument expansions; the sums are cut
// at the smallest term (optimal truncation).
struct AsymptoticSums {
  double u_even, u_odd;  // sum (-1)^k u_{2k} z^{-2k},  sum (-1)^k u_{2k+1} z^{-2k-1}
  double v_even, v_odd;
  double u_alt, v_alt;   // sum (-1)^k u_k z^{-k}, same for v
};

AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums s{0, 0, 0, 0, 0, 0};
  double u = 1.0;
  double power = 1.0;  // zeta^{-k}
  double last_term = INFINITY;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      const double kk = k;
      u *= (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216.0 * kk);
      power /= zeta;
    }
    const double v = (k == 0) ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    const double term = u * power;
    if (term > last_term) break;
    last_term = term;
    const double alt = (k % 2 == 0) ? 1.0 : -1.0;
    s.u_alt += alt * u * power;
    s.v_alt += alt * v * power;
    const double pair_sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      s.u_even += pair_sign * u * power;
      s.v_even += pair_sign * v * power;
    } else {
      s.u_odd += pair_sign * u * power;
      s.v_odd += pair_sign * v * power;
    }
    if (term < 1e-18) break;
  }
  return s;
}

Value asymptotic(double x) {
  const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
  if (x > 0.0) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const AsymptoticSums s = asymptotic_sums(zeta);
    const double decay = std::exp(-zeta) * 0.5 * inv_sqrt_pi;
    const double x14 = std::pow(x, 0.25);
    return {decay / x14 * s.u_alt, -decay * x14 * s.v_alt};
  }
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const AsymptoticSums s = asymptotic_sums(zeta);
  const double phase = zeta - 0.25 * std::numbers::pi;
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  const double z14 = std::pow(z, 0.25);
  return {inv_sqrt_pi / z14 * (c * s.u_even + sn * s.u_odd),
          inv_sqrt_pi * z14 * (sn * s.v_even - c * s.v_odd)};
}

Value evaluate_unchecked(double x) {
  return std::abs(x) <= kSeriesLimit ? series(x) : asymptotic(x);
}

void check_argument(double x) {
  if (!std::isfinite(x) || std::abs(x) > kMaxArgument) {
    throw DomainError("Airy argument outside the supported range |x| <= 20");
  }
}

// a_k ~ -T(t), t = 3 pi (4k - 1) / 8
double zero_seed(int k) {
  const double t = 3.0 * std::numbers::pi * (4.0 * k - 1.0) / 8.0;
  const double t2 = 1.0 / (t * t);
  const double series = 1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * (77125.0 / 82944.0)));
  return -std::pow(t, 2.0 / 3.0) * series;
}

}  // namespace

double airy_ai(double x) {
  check_argument(x);
  return evaluate_unchecked(x).ai;
}

double airy_ai_prime(double x) {
  check_argument(x);
  return evaluate_unchecked(x).ai_prime;
}

AiryZero airy_zero(int k) {
  if (k < 1 || k > kMaxZeroIndex) throw DomainError("Airy zero index must lie in [1, 20]");
  double x = zero_seed(k);
  for (int iter = 0; iter < 50; ++iter) {
    const Value val = evaluate_unchecked(x);
    const double step = val.ai / val.ai_prime;
    x -= step;
    if (std::abs(step) < 1e-15 * std::abs(x)) break;
  }
  return {k, x};
}

double linear_s_state_energy(int n) { return -airy_zero(n).location; }

}  // namespace powerlog
