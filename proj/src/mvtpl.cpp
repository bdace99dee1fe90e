#include "tpl/mvtpl.hpp"

#include <cmath>
#include <stdexcept>

#include "tpl/samplers.hpp"

namespace tpl {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// sgn(gamma) lambda ((theta + s)^gamma - theta^gamma), nonnegative in both
// regimes and zero at s = 0.
double component_exponent(double gamma, double lambda, double theta, double s) {
  const double diff = std::pow(theta + s, gamma) - std::pow(theta, gamma);
  return (gamma > 0.0 ? lambda : -lambda) * diff;
}

}  // namespace

mv_params::mv_params(std::vector<double> gamma_, std::vector<double> lambda_,
                     std::vector<double> theta_, double delta_, double pi_)
    : gamma(std::move(gamma_)),
      lambda(std::move(lambda_)),
      theta(std::move(theta_)),
      delta(delta_),
      pi(pi_) {
  require(!gamma.empty(), "mv_params: dimension must be at least 1");
  require(gamma.size() == lambda.size() && gamma.size() == theta.size(),
          "mv_params: gamma, lambda, theta must have equal length");
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    require(std::isfinite(gamma[i]) && gamma[i] != 0.0,
            "mv_params: gamma must be nonzero");
    if (gamma[i] > 0.0) {
      require(gamma[i] <= 1.0, "mv_params: positive gamma must be at most 1");
      require(std::isfinite(theta[i]) && theta[i] >= 0.0,
              "mv_params: theta must be nonnegative when gamma is positive");
    } else {
      require(std::isfinite(theta[i]) && theta[i] > 0.0,
              "mv_params: theta must be positive when gamma is negative");
    }
    require(std::isfinite(lambda[i]) && lambda[i] > 0.0,
            "mv_params: lambda must be positive");
  }
  require(std::isfinite(delta) && delta > 0.0,
          "mv_params: delta must be positive");
  require(std::isfinite(pi) && pi > 0.0 && pi <= 1.0,
          "mv_params: pi must lie in (0, 1]");
}

double mv_exponent(const mv_params& p, const std::vector<double>& s) {
  require(s.size() == p.dim(), "mv_exponent: s has wrong dimension");
  double log_product = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    require(std::isfinite(s[i]) && s[i] >= 0.0,
            "mv_exponent: s components must be nonnegative");
    log_product +=
        std::log1p(component_exponent(p.gamma[i], p.lambda[i], p.theta[i], s[i]));
  }
  // product of component factors minus one, computed without cancellation
  return p.delta * std::log1p(std::expm1(log_product) / p.pi);
}

double mv_log_laplace(const mv_params& p, const std::vector<double>& s,
                      double t) {
  require(std::isfinite(t) && t > 0.0, "mv_log_laplace: t must be positive");
  return -t * mv_exponent(p, s);
}

double mv_laplace(const mv_params& p, const std::vector<double>& s, double t) {
  return std::exp(mv_log_laplace(p, s, t));
}

tpl_params mv_marginal(const mv_params& p, std::size_t i, double t) {
  require(i < p.dim(), "mv_marginal: component index out of range");
  require(std::isfinite(t) && t > 0.0, "mv_marginal: t must be positive");
  return tpl_params(p.gamma[i], p.lambda[i] / p.pi, t * p.delta, p.theta[i]);
}

double mv_levy_density(const mv_params& p, const std::vector<double>& x) {
  const std::size_t d = p.dim();
  require(x.size() == d, "mv_levy_density: x has wrong dimension");
  require(d <= 10, "mv_levy_density: dimension capped at 10 for the subset sum");
  for (double xi : x)
    require(std::isfinite(xi) && xi > 0.0,
            "mv_levy_density: x components must be positive");
  std::vector<double> base(d), widened(d);
  for (std::size_t i = 0; i < d; ++i) {
    const tpl_params at(p.gamma[i], p.lambda[i], 1.0, p.theta[i]);
    const tpl_params at_widened(p.gamma[i], p.lambda[i] / p.pi, 1.0, p.theta[i]);
    base[i] = tpl_levy_density(at, x[i]);
    widened[i] = tpl_levy_density(at_widened, x[i]);
  }
  double interior = 0.0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    double term = 1.0;
    int picked = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if ((mask >> i) & 1u) {
        term *= base[i];
        ++picked;
      } else {
        term *= widened[i];
      }
    }
    interior += (picked % 2 == 0) ? term : -term;
  }
  double axis = 0.0;
  for (double v : base) axis += v;
  return p.delta * (interior + axis);
}

double mv_rho_density(const mv_params& p, const std::vector<double>& t) {
  const std::size_t d = p.dim();
  require(t.size() == d, "mv_rho_density: t has wrong dimension");
  double interior = 1.0;
  double axis = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    require(std::isfinite(t[i]) && t[i] > 0.0,
            "mv_rho_density: t components must be positive");
    const double rate = t[i] / p.lambda[i];
    // e^{-pi rate} - e^{-rate} without cancellation near pi = 1
    const double diff = std::exp(-rate) * std::expm1((1.0 - p.pi) * rate);
    interior *= diff / t[i];
    axis += std::exp(-rate) / t[i];
  }
  return p.delta * (interior + axis);
}

double mv_zero_mass(const mv_params& p, double t) {
  require(std::isfinite(t) && t > 0.0, "mv_zero_mass: t must be positive");
  double log_product = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p.gamma[i] > 0.0) return 0.0;
    log_product +=
        std::log1p(p.lambda[i] * std::pow(p.theta[i], p.gamma[i]));
  }
  return std::exp(
      -t * p.delta * std::log1p(std::expm1(log_product) / p.pi));
}

std::vector<double> mv_sample(rng& g, const mv_params& p, double t) {
  require(std::isfinite(t) && t > 0.0, "mv_sample: t must be positive");
  double ladder = p.delta * t;
  if (p.pi < 1.0) {
    const nb_params clock(p.pi, p.delta, 1.0, p.delta);
    ladder = sample_nb(g, clock, t);
  }
  std::vector<double> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double clock_i = sample_gamma(g, ladder, p.lambda[i]);
    if (clock_i > 0.0) {
      const tps_params component(p.gamma[i], p.theta[i]);
      out[i] = sample_tps(g, component, clock_i);
    } else {
      out[i] = 0.0;
    }
  }
  return out;
}

mv_scenario fig2_scenario(rng& g) {
  const mv_params p({-2.2, -2.2}, {10, 10}, {0.5, 0.5}, 1.0, 0.01);
  const std::size_t n = 5000;
  mv_scenario out;
  out.x1.resize(n);
  out.x2.resize(n);
  std::size_t z1 = 0, z2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> x = mv_sample(g, p, 1.0);
    out.x1[i] = x[0];
    out.x2[i] = x[1];
    if (x[0] == 0.0) ++z1;
    if (x[1] == 0.0) ++z2;
  }
  out.zero_freq1 = static_cast<double>(z1) / static_cast<double>(n);
  out.zero_freq2 = static_cast<double>(z2) / static_cast<double>(n);

  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m1 += out.x1[i];
    m2 += out.x2[i];
  }
  m1 /= static_cast<double>(n);
  m2 /= static_cast<double>(n);
  double c12 = 0.0, v1 = 0.0, v2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d1 = out.x1[i] - m1;
    const double d2 = out.x2[i] - m2;
    c12 += d1 * d2;
    v1 += d1 * d1;
    v2 += d2 * d2;
  }
  out.correlation = c12 / std::sqrt(v1 * v2);
  return out;
}

}  // namespace tpl
