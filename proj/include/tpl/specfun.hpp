#pragma once

#include <cstdint>

namespace tpl {

// Status attached to series evaluations.  `degraded` means the value was
// computed but the requested tolerance cannot be guaranteed, either because
// the argument left the declared accuracy domain or because alternating
// cancellation consumed too many digits.
enum class series_status { ok, degraded };

struct ml_result {
  double value;
  series_status status;
  int terms;          // number of series terms actually summed
  double tail_bound;  // geometric bound on the truncation remainder
};

// Accuracy domain for the Mittag-Leffler series: |z| <= ml_z_max is the
// region where the 1e-12 default tolerance is honored; outside it the result
// is flagged degraded.
inline constexpr double ml_z_max = 50.0;

// Three-parameter (Prabhakar) Mittag-Leffler function
//   E^c_{a,b}(z) = sum_k (c)_k z^k / (k! Gamma(ak+b)),   a > 0, b > 0.
// Series evaluation with Kahan compensation; term magnitudes are tracked so
// overflow raises std::domain_error (message carries the partial sum) and
// heavy cancellation flips the status flag instead of returning quietly.
ml_result mittag_leffler(double a, double b, double c, double z, double tol = 1e-12);

// Classical one- and two-parameter cases, value only.
double ml1(double a, double z);
double ml2(double a, double b, double z);

// ln Gamma(x) for x > 0; std::domain_error otherwise.  Relative accuracy
// 1e-14 (validated in the tests against a Stirling-series oracle).
double log_gamma(double x);

// 1/Gamma(x) for arbitrary real x, in sign/log-magnitude form so series over
// negative Gamma arguments can be assembled without overflow.  sign == 0
// marks the exact zeros at x = 0, -1, -2, ...
struct signed_log {
  double log_abs;
  int sign;
};
signed_log log_rgamma(double x);

// sin(pi x) with argument reduction done on x itself, accurate for large x.
double sin_pi(double x);

// Fox-Wright style series  sum_k Gamma(a k + b) c^k s^{-a k - b} / Gamma(p k + q).
// Internal oracle for Laplace-transform cross checks.  Converges for a < p,
// and for a == p when |c| < s^a; anything else is refused.
double fox_wright_2psi1(double a, double b, double p, double q, double c,
                        double s, double tol = 1e-12);

// Exponential integral E1(x), x > 0: series for small x, continued fraction
// (modified Lentz) for large x.
double expint_e1(double x);

}  // namespace tpl
