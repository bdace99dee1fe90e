#include "tpl/paths.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tpl/quadrature.hpp"
#include "tpl/samplers.hpp"

namespace tpl {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// plus regime with lambda theta^gamma <= 1: the regions where the
// mean-reverting and self-similar constructions are defined.
void require_sd_region(const tpl_params& p, const char* who) {
  if (p.sign_regime() != regime::plus) {
    std::ostringstream os;
    os << who << ": plus regime required";
    throw std::invalid_argument(os.str());
  }
  const double lt = p.lambda * std::pow(p.theta, p.gamma);
  if (lt > 1.0) {
    std::ostringstream os;
    os << who << ": requires lambda theta^gamma <= 1, got " << lt;
    throw std::invalid_argument(os.str());
  }
}

path make_path(const time_grid& grid) {
  path out;
  out.t.resize(grid.steps + 1);
  out.x.assign(grid.steps + 1, 0.0);
  for (std::size_t i = 0; i <= grid.steps; ++i) out.t[i] = grid.time(i);
  return out;
}

// Decreasing tail mass of the family Levy density, scaled argument version:
// k(y) = gamma delta e^(-theta y) E_gamma(c y^gamma), y > 0, with c <= 0.
double sd_kernel(const tpl_params& p, double y) {
  const double c = c_coefficient(p);
  const ml_result ml =
      mittag_leffler(p.gamma, 1.0, 1.0, c * std::pow(y, p.gamma));
  const double v = ml.value < 0.0 ? 0.0 : ml.value;  // deep-tail noise guard
  return p.gamma * p.delta * std::exp(-p.theta * y) * v;
}

// Integral of sd_kernel over (0, z).
double sd_kernel_mass(const tpl_params& p, double z) {
  if (z <= 0.0) return 0.0;
  return integrate_finite([&](double y) { return sd_kernel(p, y); }, 0.0, z,
                          1e-11)
      .value;
}

// Inverts E1(a x) = target on x >= lo by bracketed bisection.
double expint_e1_inverse(double a, double lo, double target) {
  double hi = lo;
  double span = lo > 0.0 ? lo : 1.0 / a;
  while (expint_e1(a * (hi + span)) > target) {
    hi += span;
    span *= 2.0;
    if (!(hi + span < 1e300))
      throw std::runtime_error("expint_e1_inverse: no bracket");
  }
  double lft = hi, rgt = hi + span;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lft + rgt);
    if (expint_e1(a * mid) > target)
      lft = mid;
    else
      rgt = mid;
    if (rgt - lft <= 1e-12 * rgt) break;
  }
  return 0.5 * (lft + rgt);
}

}  // namespace

time_grid::time_grid(double horizon_, std::size_t steps_)
    : horizon(horizon_), steps(steps_) {
  require(std::isfinite(horizon) && horizon > 0.0,
          "time_grid: horizon must be positive");
  require(steps >= 1, "time_grid: need at least one step");
}

path tpl_levy_path(rng& g, const tpl_params& p, const time_grid& grid,
                   tpl_path_method method, double ladder_pi) {
  path out = make_path(grid);
  const double dt = grid.dt();
  switch (method) {
    case tpl_path_method::subordinator: {
      for (std::size_t i = 1; i <= grid.steps; ++i)
        out.x[i] = out.x[i - 1] + sample_tpl(g, p, dt);
      break;
    }
    case tpl_path_method::compound_poisson: {
      if (p.sign_regime() != regime::minus)
        throw std::invalid_argument(
            "tpl_levy_path: compound_poisson needs the minus regime");
      const double rate = tpl_levy_mass(p);
      const lml_params jump(-p.gamma, c_coefficient(p), p.theta);
      for (std::size_t i = 1; i <= grid.steps; ++i) {
        double inc = 0.0;
        const std::int64_t n = sample_poisson(g, rate * dt);
        for (std::int64_t j = 0; j < n; ++j) inc += sample_lml(g, jump);
        out.x[i] = out.x[i - 1] + inc;
      }
      break;
    }
    case tpl_path_method::nb_gamma: {
      require(ladder_pi > 0.0 && ladder_pi < 1.0,
              "tpl_levy_path: ladder pi must lie in (0, 1)");
      const nb_params ladder(ladder_pi, p.delta, 1.0, p.delta);
      const tps_params sub(p.gamma, p.theta);
      for (std::size_t i = 1; i <= grid.steps; ++i) {
        const double b = sample_nb(g, ladder, dt);
        const double clock = sample_gamma(g, b, p.lambda * ladder_pi);
        out.x[i] = out.x[i - 1] + sample_tps(g, sub, clock);
      }
      break;
    }
  }
  return out;
}

path nb_path(rng& g, const nb_params& p, const time_grid& grid) {
  path out = make_path(grid);
  for (std::size_t i = 1; i <= grid.steps; ++i)
    out.x[i] = out.x[i - 1] + sample_nb(g, p, grid.dt());
  return out;
}

tml_params ou_jump_params(const tpl_params& p) {
  require_sd_region(p, "ou_jump_params");
  return tml_params(p.gamma, -c_coefficient(p), p.theta);
}

path ou_path(rng& g, const tpl_params& p, const time_grid& grid,
             const ou_options& opt) {
  require(opt.alpha > 0.0, "ou_path: alpha must be positive");
  const tml_params jump = ou_jump_params(p);
  const double rate = opt.alpha * p.delta * p.gamma;
  const double dt = grid.dt();
  path out = make_path(grid);
  out.x[0] = opt.stationary_start ? sample_tpl(g, p, 1.0) : opt.x0;
  require(out.x[0] >= 0.0, "ou_path: x0 must be nonnegative");
  const double decay = std::exp(-opt.alpha * dt);
  for (std::size_t i = 1; i <= grid.steps; ++i) {
    const std::int64_t n = sample_poisson(g, rate * dt);
    if (opt.euler) {
      double inc = 0.0;
      for (std::int64_t j = 0; j < n; ++j) inc += sample_tml(g, jump);
      out.x[i] = out.x[i - 1] * (1.0 - opt.alpha * dt) + inc;
      if (out.x[i] < 0.0) out.x[i] = 0.0;
    } else {
      double acc = out.x[i - 1] * decay;
      for (std::int64_t j = 0; j < n; ++j) {
        const double tau = dt * g.uniform01();
        acc += sample_tml(g, jump) * std::exp(-opt.alpha * (dt - tau));
      }
      out.x[i] = acc;
    }
  }
  return out;
}

double ou_driver_exponent(const tpl_params& p, double alpha, double s) {
  require_sd_region(p, "ou_driver_exponent");
  require(alpha > 0.0, "ou_driver_exponent: alpha must be positive");
  require(s >= 0.0, "ou_driver_exponent: s must be nonnegative");
  const double num = p.lambda * s * std::pow(p.theta + s, p.gamma - 1.0);
  const double den =
      1.0 + p.lambda * (std::pow(p.theta + s, p.gamma) -
                        std::pow(p.theta, p.gamma));
  return alpha * p.delta * p.gamma * num / den;
}

double ou_driver_exponent_alt(const tpl_params& p, double alpha, double s) {
  require_sd_region(p, "ou_driver_exponent_alt");
  require(alpha > 0.0, "ou_driver_exponent_alt: alpha must be positive");
  require(s >= 0.0, "ou_driver_exponent_alt: s must be nonnegative");
  const tml_params jump = ou_jump_params(p);
  return alpha * p.delta * p.gamma * (1.0 - tml_laplace(jump, s));
}

double ou_background_levy_density(const tpl_params& p, double alpha, double x,
                                  series_status* status) {
  require_sd_region(p, "ou_background_levy_density");
  require(alpha > 0.0, "ou_background_levy_density: alpha must be positive");
  const tml_params jump = ou_jump_params(p);
  return alpha * p.delta * p.gamma * tml_pdf(jump, x, status);
}

tpl_params sato_marginal(const tpl_params& p, double H, double t) {
  require(H > 0.0, "sato_marginal: H must be positive");
  require(t > 0.0, "sato_marginal: t must be positive");
  return tpl_params(p.gamma, p.lambda * std::pow(t, H * p.gamma), p.delta,
                    p.theta * std::pow(t, -H));
}

double sato_laplace_residual(const tpl_params& p, double H, double t,
                             double s) {
  require(s >= 0.0, "sato_laplace_residual: s must be nonnegative");
  const tpl_params m = sato_marginal(p, H, t);
  return std::fabs(tpl_laplace(m, s, 1.0) -
                   tpl_laplace(p, s * std::pow(t, H), 1.0));
}

sato_path_result sato_path(rng& g, const tpl_params& p, const time_grid& grid,
                           const sato_options& opt) {
  require_sd_region(p, "sato_path");
  require(opt.H > 0.0, "sato_path: H must be positive");
  require(opt.eps > 0.0, "sato_path: eps must be positive");
  const double th = std::pow(grid.horizon, opt.H);
  const double horizon_mean =
      p.gamma * p.delta * p.lambda * std::pow(p.theta, p.gamma - 1.0) * th;
  const double total_bias =
      th * sd_kernel_mass(p, opt.eps / th);
  if (total_bias > 0.1 * horizon_mean) {
    std::ostringstream os;
    os << "sato_path: eps = " << opt.eps << " discards mean mass "
       << total_bias << ", more than ten percent of the horizon mean "
       << horizon_mean << "; decrease eps";
    throw std::invalid_argument(os.str());
  }
  path out = make_path(grid);
  const double c = c_coefficient(p);
  for (std::size_t i = 1; i <= grid.steps; ++i) {
    const double ts = out.t[i - 1];
    const double tt = out.t[i];
    const double at = p.theta * std::pow(tt, -opt.H);
    const double ss = ts > 0.0 ? std::pow(ts, -opt.H) : 0.0;
    // Envelope: jump sizes with density proportional to e^(-at x)/x above
    // eps, thinned down to the exact cell intensity.
    const double e1_eps = expint_e1(at * opt.eps);
    const std::int64_t n =
        sample_poisson(g, p.gamma * p.delta * e1_eps);
    double inc = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
      const double x =
          expint_e1_inverse(at, opt.eps, g.uniform_pos() * e1_eps);
      const double zt = c * std::pow(std::pow(tt, -opt.H) * x, p.gamma);
      double accept = mittag_leffler(p.gamma, 1.0, 1.0, zt).value;
      if (ts > 0.0) {
        const double zs = c * std::pow(ss * x, p.gamma);
        accept -= std::exp(-(p.theta * ss - at) * x) *
                  mittag_leffler(p.gamma, 1.0, 1.0, zs).value;
      }
      if (accept < 0.0) accept = 0.0;
      if (accept > 1.0) accept = 1.0;
      if (g.uniform01() < accept) inc += x;
    }
    out.x[i] = out.x[i - 1] + inc;
  }
  return {out, total_bias};
}

}  // namespace tpl
