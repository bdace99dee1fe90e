#include "tpl/samplers.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tpl {

namespace {

constexpr double pi_const = 3.14159265358979323846;

std::int64_t poisson_inversion(rng& g, double mean) {
  const double u = g.uniform01();
  double p = std::exp(-mean);
  double s = p;
  std::int64_t k = 0;
  while (u > s && k < 400) {
    ++k;
    p *= mean / static_cast<double>(k);
    s += p;
  }
  return k;
}

// Transformed rejection with squeeze, for large means.
std::int64_t poisson_ptrs(rng& g, double mean) {
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = g.uniform01() - 0.5;
    double v = g.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double k = kf;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = k * log_mean - mean - log_gamma(k + 1.0);
    if (lhs <= rhs) return static_cast<std::int64_t>(kf);
  }
}

}  // namespace

double sample_gamma(rng& g, double shape, double scale) {
  if (!(shape > 0.0)) throw std::invalid_argument("sample_gamma: shape must be positive");
  if (!(scale > 0.0)) throw std::invalid_argument("sample_gamma: scale must be positive");
  if (shape < 1.0) {
    const double boost = std::pow(g.uniform_pos(), 1.0 / shape);
    return sample_gamma(g, shape + 1.0, scale) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = g.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = g.uniform_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
      return d * v * scale;
  }
}

double sample_stable(rng& g, double a) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("sample_stable: a must lie in (0, 1]");
  if (a == 1.0) return 1.0;
  for (;;) {
    const double u = pi_const * g.uniform_pos();
    const double w = g.exponential();
    const double log_num = (a / (1.0 - a)) * std::log(std::sin(a * u)) +
                           std::log(std::sin((1.0 - a) * u)) -
                           (1.0 / (1.0 - a)) * std::log(std::sin(u));
    const double s = std::exp(((1.0 - a) / a) * (log_num - std::log(w)));
    if (std::isfinite(s) && s > 0.0) return s;
  }
}

std::int64_t sample_poisson(rng& g, double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("sample_poisson: mean must be nonnegative");
  if (mean == 0.0) return 0;
  return mean < 30.0 ? poisson_inversion(g, mean) : poisson_ptrs(g, mean);
}

std::int64_t sample_logarithmic(rng& g, double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("sample_logarithmic: q must lie in (0, 1)");
  const double h = std::log1p(-q);
  const double u2 = g.uniform_pos();
  if (u2 > q) return 1;
  const double u1 = g.uniform_pos();
  const double x = -std::expm1(u1 * h);  // 1 - (1 - q)^u1, in (0, q)
  if (u2 < x * x)
    return static_cast<std::int64_t>(1.0 + std::log(u2) / std::log(x));
  return u2 > x ? 1 : 2;
}

std::int64_t sample_geometric(rng& g, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("sample_geometric: p must lie in (0, 1)");
  const double u = g.uniform_pos();
  const double k = std::ceil(std::log(u) / std::log1p(-p));
  return k < 1.0 ? 1 : static_cast<std::int64_t>(k);
}

double sample_tps_once(rng& g, const tps_params& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_tps_once: t must be positive");
  if (p.sign_regime() != regime::plus)
    throw std::invalid_argument("sample_tps_once: plus regime only");
  if (p.gamma == 1.0) return t;  // degenerate drift
  const double exponent = t * std::pow(p.theta, p.gamma);
  const double trials = std::exp(exponent);
  if (trials > 30.0) {
    std::ostringstream os;
    os << "sample_tps_once: expected rejection trials " << trials
       << " exceed budget 30; split the time argument";
    throw std::runtime_error(os.str());
  }
  const double scale = std::pow(t, 1.0 / p.gamma);
  for (;;) {
    const double s = scale * sample_stable(g, p.gamma);
    if (p.theta == 0.0 || g.uniform01() < std::exp(-p.theta * s)) return s;
  }
}

double sample_tps(rng& g, const tps_params& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_tps: t must be positive");
  if (p.sign_regime() == regime::minus) {
    const std::int64_t n =
        sample_poisson(g, t * std::pow(p.theta, p.gamma));
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
      sum += sample_gamma(g, -p.gamma, 1.0 / p.theta);
    return sum;
  }
  if (p.gamma == 1.0) return t;
  const double exponent = t * std::pow(p.theta, p.gamma);
  const std::int64_t slices =
      exponent > 1.0 ? static_cast<std::int64_t>(std::ceil(exponent)) : 1;
  double sum = 0.0;
  for (std::int64_t i = 0; i < slices; ++i)
    sum += sample_tps_once(g, p, t / static_cast<double>(slices));
  return sum;
}

double sample_tpl(rng& g, const tpl_params& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_tpl: t must be positive");
  if (p.gamma == 1.0) return sample_gamma(g, t * p.delta, p.lambda);
  const double sub = p.lambda * sample_gamma(g, t * p.delta, 1.0);
  return sample_tps(g, tps_params(p.gamma, p.theta), sub);
}

double sample_lml(rng& g, const lml_params& p) {
  if (p.c == 0.0) return sample_gamma(g, p.a, 1.0 / p.theta);
  if (p.c < 0.0)
    throw std::invalid_argument(
        "sample_lml: mixture sampler needs c >= 0");
  const double q = p.c * std::pow(p.theta, -p.a);
  const std::int64_t k = sample_logarithmic(g, q);
  return sample_gamma(g, p.a * static_cast<double>(k), 1.0 / p.theta);
}

double sample_tml(rng& g, const tml_params& p) {
  // Survival e^(-theta x) E_a(-c x^a) factors as the product of an Exp(theta)
  // survival and a scaled Mittag-Leffler survival, so the law is the minimum
  // of the two.
  const double e = g.exponential() / p.theta;
  if (p.c == 0.0) return e;
  double m;
  if (p.a == 1.0) {
    m = g.exponential() / p.c;
  } else {
    m = std::pow(p.c, -1.0 / p.a) *
        std::pow(g.exponential(), 1.0 / p.a) * sample_stable(g, p.a);
  }
  return e < m ? e : m;
}

double sample_nb(rng& g, const nb_params& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_nb: t must be positive");
  double sum = p.mu * t;
  const std::int64_t n = sample_poisson(g, t * nb_jump_rate(p));
  for (std::int64_t i = 0; i < n; ++i)
    sum += p.alpha * static_cast<double>(sample_logarithmic(g, 1.0 - p.pi));
  return sum;
}

}  // namespace tpl
