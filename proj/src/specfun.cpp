#include "tpl/specfun.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tpl {

namespace {

constexpr double pi_const = 3.14159265358979323846;

// The Mittag-Leffler term recurrence needs Gamma(ak+b)/Gamma(a(k+1)+b) at
// every step.  Those ratios depend only on (a, b), and samplers evaluate the
// same (a, b) millions of times, so they are memoized per thread.
struct ab_key {
  double a;
  double b;
  bool operator==(const ab_key&) const = default;
};

struct ab_hash {
  std::size_t operator()(const ab_key& k) const noexcept {
    const std::size_t ha = std::hash<double>{}(k.a);
    const std::size_t hb = std::hash<double>{}(k.b);
    return ha ^ (hb + 0x9e3779b97f4a7c15ULL + (ha << 6) + (ha >> 2));
  }
};

using ratio_table = std::vector<double>;

ratio_table& gamma_ratios(double a, double b) {
  thread_local std::unordered_map<ab_key, ratio_table, ab_hash> cache;
  if (cache.size() > 64) cache.clear();
  return cache[ab_key{a, b}];
}

void extend_ratios(ratio_table& r, double a, double b, std::size_t upto) {
  r.reserve(upto);
  while (r.size() < upto) {
    const double k = static_cast<double>(r.size());
    r.push_back(std::exp(std::lgamma(a * k + b) - std::lgamma(a * (k + 1) + b)));
  }
}

[[noreturn]] void throw_overflow(double a, double b, double c, double z,
                                 double partial, int k) {
  std::ostringstream msg;
  msg << "mittag_leffler: series term overflow at k=" << k << " for a=" << a
      << " b=" << b << " c=" << c << " z=" << z << "; partial sum " << partial;
  throw std::domain_error(msg.str());
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1], exact
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(pi_const * r);
}

signed_log log_rgamma(double x) {
  if (x > 0.0) return {-std::lgamma(x), 1};
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi.
  const double s = sin_pi(x);
  if (s == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::fabs(s)) + std::lgamma(1.0 - x) - std::log(pi_const),
          s > 0.0 ? 1 : -1};
}

ml_result mittag_leffler(double a, double b, double c, double z, double tol) {
  if (!(a > 0.0)) throw std::domain_error("mittag_leffler: a must be positive");
  if (!(b > 0.0)) throw std::domain_error("mittag_leffler: b must be positive");
  if (!std::isfinite(z)) throw std::domain_error("mittag_leffler: z not finite");

  const double term0 = std::exp(-std::lgamma(b));
  const bool outside_domain = std::fabs(z) > ml_z_max;
  if (z == 0.0)
    return {term0, outside_domain ? series_status::degraded : series_status::ok,
            1, 0.0};

  ratio_table& ratios = gamma_ratios(a, b);

  constexpr int k_max = 200000;
  double sum = term0;
  double comp = 0.0;  // Kahan carry
  double term = term0;
  double prev_abs = std::fabs(term0);
  double max_abs = prev_abs;
  int consecutive_small = 0;
  int k = 0;
  double last_ratio = 0.0;

  while (k < k_max) {
    if (static_cast<std::size_t>(k) >= ratios.size())
      extend_ratios(ratios, a, b, ratios.size() + 64);
    // t_{k+1} = t_k * z * (c+k)/(k+1) * Gamma(ak+b)/Gamma(a(k+1)+b)
    const double poch_step = (c + k) / (k + 1.0);
    term *= z * poch_step * ratios[static_cast<std::size_t>(k)];
    ++k;
    if (term == 0.0) break;  // Pochhammer hit zero: the series terminates
    const double abs_term = std::fabs(term);
    if (!std::isfinite(term) || abs_term > 1e290)
      throw_overflow(a, b, c, z, sum, k);

    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    if (abs_term > max_abs) max_abs = abs_term;
    last_ratio = abs_term / prev_abs;
    // Accept convergence only past the hump (terms decreasing), twice in a
    // row, so a small leading term cannot fake an early exit.
    if (abs_term <= tol * std::fabs(sum) && last_ratio < 1.0) {
      if (++consecutive_small >= 2) break;
    } else {
      consecutive_small = 0;
    }
    prev_abs = abs_term;
  }

  if (k >= k_max) {
    std::ostringstream msg;
    msg << "mittag_leffler: no convergence within " << k_max
        << " terms for a=" << a << " b=" << b << " c=" << c << " z=" << z
        << "; partial sum " << sum;
    throw std::domain_error(msg.str());
  }

  // Past the hump the term ratios decrease, so the remainder is bounded by a
  // geometric tail with the last observed ratio.
  double tail = 0.0;
  if (last_ratio > 0.0 && last_ratio < 1.0)
    tail = std::fabs(term) * last_ratio / (1.0 - last_ratio);

  series_status status = series_status::ok;
  if (outside_domain) status = series_status::degraded;
  // Cancellation: if the largest term dwarfs the sum, the leading digits of
  // the result were formed by subtraction and tol can no longer be promised.
  const double scale = std::fabs(sum);
  if (scale == 0.0 || max_abs > scale * 1e3) status = series_status::degraded;

  return {sum, status, k + 1, tail};
}

double ml1(double a, double z) { return mittag_leffler(a, 1.0, 1.0, z).value; }

double ml2(double a, double b, double z) {
  return mittag_leffler(a, b, 1.0, z).value;
}

double fox_wright_2psi1(double a, double b, double p, double q, double c,
                        double s, double tol) {
  if (!(a > 0.0) || !(b > 0.0) || !(p > 0.0) || !(q > 0.0))
    throw std::domain_error("fox_wright_2psi1: parameters must be positive");
  if (!(s > 0.0)) throw std::domain_error("fox_wright_2psi1: s must be positive");
  if (a > p)
    throw std::domain_error("fox_wright_2psi1: divergent series (a > p)");
  const double log_s = std::log(s);
  if (a == p && std::fabs(c) >= std::pow(s, a))
    throw std::domain_error(
        "fox_wright_2psi1: divergent series (|c| >= s^a on the a == p ray)");

  const double log_abs_c = std::log(std::fabs(c));
  const int c_sign = c < 0.0 ? -1 : 1;

  constexpr int k_max = 20000;
  double sum = 0.0;
  double comp = 0.0;
  double prev_abs = std::numeric_limits<double>::infinity();
  int consecutive_small = 0;
  for (int k = 0; k < k_max; ++k) {
    const double log_term = std::lgamma(a * k + b) + k * log_abs_c -
                            (a * k + b) * log_s - std::lgamma(p * k + q);
    if (log_term > 700.0)
      throw std::domain_error("fox_wright_2psi1: term overflow");
    const double abs_term = std::exp(log_term);
    const double term = (c_sign < 0 && (k & 1)) ? -abs_term : abs_term;

    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    if (k > 0 && abs_term <= tol * std::fabs(sum) && abs_term < prev_abs) {
      if (++consecutive_small >= 2) return sum;
    } else {
      consecutive_small = 0;
    }
    prev_abs = abs_term;
  }
  throw std::domain_error("fox_wright_2psi1: no convergence");
}

double expint_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("expint_e1: argument must be positive");
  constexpr double euler_gamma = 0.57721566490153286061;
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
      term *= x / k;
      const double contrib = ((k & 1) ? term : -term) / k;
      sum += contrib;
      if (std::fabs(contrib) < 1e-17 * std::fabs(sum)) break;
    }
    return -euler_gamma - std::log(x) + sum;
  }
  // Continued fraction E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
  // evaluated with the modified Lentz algorithm.
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace tpl
