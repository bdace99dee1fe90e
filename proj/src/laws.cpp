#include "tpl/laws.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tpl {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// sgn(gamma) ((theta + s)^gamma - theta^gamma); nonnegative and increasing
// in s >= 0 for both regimes.
double base_exponent(double gamma, double theta, double s) {
  const double a = std::pow(theta + s, gamma);
  const double b = std::pow(theta, gamma);
  return gamma > 0.0 ? a - b : b - a;
}

}  // namespace

tpl_params::tpl_params(double gamma_, double lambda_, double delta_,
                       double theta_)
    : gamma(gamma_), lambda(lambda_), delta(delta_), theta(theta_) {
  require(std::isfinite(gamma) && gamma != 0.0 && gamma <= 1.0,
          "tpl_params: gamma must lie in (0, 1] or be negative");
  require(std::isfinite(lambda) && lambda > 0.0,
          "tpl_params: lambda must be positive");
  require(std::isfinite(delta) && delta > 0.0,
          "tpl_params: delta must be positive");
  require(std::isfinite(theta), "tpl_params: theta must be finite");
  if (gamma > 0.0)
    require(theta >= 0.0, "tpl_params: theta must be nonnegative");
  else
    require(theta > 0.0,
            "tpl_params: theta must be positive when gamma is negative");
}

tps_params::tps_params(double gamma_, double theta_)
    : gamma(gamma_), theta(theta_) {
  require(std::isfinite(gamma) && gamma != 0.0 && gamma <= 1.0,
          "tps_params: gamma must lie in (0, 1] or be negative");
  require(std::isfinite(theta), "tps_params: theta must be finite");
  if (gamma > 0.0)
    require(theta >= 0.0, "tps_params: theta must be nonnegative");
  else
    require(theta > 0.0,
            "tps_params: theta must be positive when gamma is negative");
}

double c_coefficient(double gamma, double lambda, double theta) {
  const double lt = lambda * std::pow(theta, gamma);
  if (gamma > 0.0) return (lt - 1.0) / lambda;
  return lambda / (1.0 + lt);
}

double c_coefficient(const tpl_params& p) {
  return c_coefficient(p.gamma, p.lambda, p.theta);
}

double tpl_log_laplace(const tpl_params& p, double s, double t) {
  require(s >= 0.0, "tpl_log_laplace: s must be nonnegative");
  require(t > 0.0, "tpl_log_laplace: t must be positive");
  return -t * p.delta * std::log1p(p.lambda * base_exponent(p.gamma, p.theta, s));
}

double tpl_laplace(const tpl_params& p, double s, double t) {
  return std::exp(tpl_log_laplace(p, s, t));
}

double tpl_pdf(const tpl_params& p, double x, double t,
               series_status* status) {
  if (p.sign_regime() != regime::plus)
    throw std::domain_error(
        "tpl_pdf: density is available in the plus regime only");
  require(x > 0.0, "tpl_pdf: x must be positive");
  require(t > 0.0, "tpl_pdf: t must be positive");
  const double d = t * p.delta;
  const double c = c_coefficient(p);
  const double z = c * std::pow(x, p.gamma);
  const ml_result ml = mittag_leffler(p.gamma, p.gamma * d, d, z);
  if (status) *status = ml.status;
  const double log_pref =
      -p.theta * x + (p.gamma * d - 1.0) * std::log(x) - d * std::log(p.lambda);
  return std::exp(log_pref) * ml.value;
}

double tpl_point_mass(const tpl_params& p, double t) {
  require(t > 0.0, "tpl_point_mass: t must be positive");
  if (p.sign_regime() == regime::plus) return 0.0;
  return std::exp(-t * p.delta *
                  std::log1p(p.lambda * std::pow(p.theta, p.gamma)));
}

double tpl_levy_density(const tpl_params& p, double x, series_status* status) {
  require(x > 0.0, "tpl_levy_density: x must be positive");
  const double ag = std::fabs(p.gamma);
  const double c = c_coefficient(p);
  if (p.sign_regime() == regime::plus) {
    const double lt = p.lambda * std::pow(p.theta, p.gamma);
    if (lt > 1.0) {
      std::ostringstream os;
      os << "tpl_levy_density: representation requires lambda theta^gamma <= 1"
            " in the plus regime, got "
         << lt;
      throw std::domain_error(os.str());
    }
  }
  const ml_result ml = mittag_leffler(ag, 1.0, 1.0, c * std::pow(x, ag));
  if (status) *status = ml.status;
  const double body =
      p.sign_regime() == regime::plus ? ml.value : ml.value - 1.0;
  return ag * p.delta * std::exp(-p.theta * x) / x * body;
}

double tpl_levy_mass(const tpl_params& p) {
  if (p.sign_regime() == regime::plus)
    return std::numeric_limits<double>::infinity();
  return p.delta * std::log1p(p.lambda * std::pow(p.theta, p.gamma));
}

double tpl_cumulant_ratio(const tpl_params& p) {
  // Both regimes reduce to c theta^(-|gamma|).
  return c_coefficient(p) * std::pow(p.theta, -std::fabs(p.gamma));
}

double tpl_cumulant(const tpl_params& p, int n, double t) {
  require(n >= 1, "tpl_cumulant: order must be at least 1");
  require(n <= 20, "tpl_cumulant: order capped at 20");
  require(t > 0.0, "tpl_cumulant: t must be positive");
  const double ag = std::fabs(p.gamma);
  const double x = tpl_cumulant_ratio(p);
  if (!(std::fabs(x) < 1.0)) {
    std::ostringstream os;
    os << "tpl_cumulant: recursion ratio " << x
       << " lies outside (-1, 1), series representation diverges";
    throw std::domain_error(os.str());
  }
  // kappa_n = t |gamma| delta theta^-n A_{n-1}(x) / (1 - x)^n with
  //   A_0 = 1 (plus), A_0 = x (minus),
  //   A_{m+1} = |gamma| x ((1 - x) A_m' + (m + 1) A_m) + (m + 1)(1 - x) A_m.
  std::vector<double> a;
  if (p.sign_regime() == regime::plus)
    a = {1.0};
  else
    a = {0.0, 1.0};
  for (int m = 0; m < n - 1; ++m) {
    std::vector<double> next(a.size() + 1, 0.0);
    const double mm = static_cast<double>(m + 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double coef = a[j];
      if (coef == 0.0) continue;
      // |gamma| x (1 - x) A': degree j term of A' is j x^(j-1)
      if (j >= 1) {
        next[j] += ag * static_cast<double>(j) * coef;
        next[j + 1] -= ag * static_cast<double>(j) * coef;
      }
      // |gamma| x (m + 1) A
      next[j + 1] += ag * mm * coef;
      // (m + 1)(1 - x) A
      next[j] += mm * coef;
      next[j + 1] -= mm * coef;
    }
    a.swap(next);
  }
  double poly = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) poly = poly * x + a[j];
  return t * ag * p.delta * std::pow(p.theta, -n) * poly /
         std::pow(1.0 - x, n);
}

double tpl_mean(const tpl_params& p, double t) {
  require(t > 0.0, "tpl_mean: t must be positive");
  return t * std::fabs(p.gamma) * p.delta * p.lambda *
         std::pow(p.theta, p.gamma - 1.0);
}

double tpl_variance(const tpl_params& p, double t) {
  require(t > 0.0, "tpl_variance: t must be positive");
  const double m = tpl_mean(p, t);
  const double base = m * m / (t * p.delta);
  if (p.gamma == 1.0) return base;  // avoid 0/0 when theta = 0
  return base + m * (1.0 - p.gamma) / p.theta;
}

double tps_log_laplace(const tps_params& p, double s, double t) {
  require(s >= 0.0, "tps_log_laplace: s must be nonnegative");
  require(t > 0.0, "tps_log_laplace: t must be positive");
  return -t * base_exponent(p.gamma, p.theta, s);
}

double tps_laplace(const tps_params& p, double s, double t) {
  return std::exp(tps_log_laplace(p, s, t));
}

double tps_mean(const tps_params& p, double t) {
  require(t > 0.0, "tps_mean: t must be positive");
  require(p.theta > 0.0, "tps_mean: theta must be positive");
  return t * std::fabs(p.gamma) * std::pow(p.theta, p.gamma - 1.0);
}

double tps_variance(const tps_params& p, double t) {
  require(t > 0.0, "tps_variance: t must be positive");
  require(p.theta > 0.0, "tps_variance: theta must be positive");
  return t * std::fabs(p.gamma) * (1.0 - p.gamma) *
         std::pow(p.theta, p.gamma - 2.0);
}

double tps_potential_density(const tps_params& p, double q, double x,
                             series_status* status) {
  if (p.sign_regime() != regime::plus)
    throw std::domain_error(
        "tps_potential_density: available in the plus regime only");
  require(q > 0.0, "tps_potential_density: q must be positive");
  require(x > 0.0, "tps_potential_density: x must be positive");
  const double z = (std::pow(p.theta, p.gamma) - q) * std::pow(x, p.gamma);
  const ml_result ml = mittag_leffler(p.gamma, p.gamma, 1.0, z);
  if (status) *status = ml.status;
  return std::exp(-p.theta * x) * std::pow(x, p.gamma - 1.0) * ml.value;
}

lml_params::lml_params(double a_, double c_, double theta_)
    : a(a_), c(c_), theta(theta_) {
  require(std::isfinite(a) && a > 0.0, "lml_params: a must be positive");
  require(std::isfinite(theta) && theta > 0.0,
          "lml_params: theta must be positive");
  require(std::isfinite(c) && std::fabs(c) < std::pow(theta, a),
          "lml_params: need |c| < theta^a");
}

double lml_normalizer(const lml_params& p) {
  const double q = p.c * std::pow(p.theta, -p.a);
  if (q == 0.0) return p.a * std::pow(p.theta, p.a);
  return -p.a * p.c / std::log1p(-q);
}

double lml_pdf(const lml_params& p, double x, series_status* status) {
  require(x > 0.0, "lml_pdf: x must be positive");
  const ml_result ml =
      mittag_leffler(p.a, p.a + 1.0, 1.0, p.c * std::pow(x, p.a));
  if (status) *status = ml.status;
  return lml_normalizer(p) * std::exp(-p.theta * x) *
         std::pow(x, p.a - 1.0) * ml.value;
}

double lml_laplace(const lml_params& p, double s) {
  require(s >= 0.0, "lml_laplace: s must be nonnegative");
  const double q0 = p.c * std::pow(p.theta, -p.a);
  const double qs = p.c * std::pow(p.theta + s, -p.a);
  if (q0 == 0.0) return std::pow(1.0 + s / p.theta, -p.a);  // gamma limit
  return std::log1p(-qs) / std::log1p(-q0);
}

double lml_mean(const lml_params& p) {
  const double q = p.c * std::pow(p.theta, -p.a);
  if (q == 0.0) return p.a / p.theta;
  return -p.a * q / (p.theta * (1.0 - q) * std::log1p(-q));
}

tml_params::tml_params(double a_, double c_, double theta_)
    : a(a_), c(c_), theta(theta_) {
  require(std::isfinite(a) && a > 0.0 && a <= 1.0,
          "tml_params: a must lie in (0, 1]");
  require(std::isfinite(c) && c >= 0.0, "tml_params: c must be nonnegative");
  require(std::isfinite(theta) && theta > 0.0,
          "tml_params: theta must be positive");
}

double tml_cdf(const tml_params& p, double x, series_status* status) {
  if (x <= 0.0) return 0.0;
  const ml_result ml =
      mittag_leffler(p.a, 1.0, 1.0, -p.c * std::pow(x, p.a));
  if (status) *status = ml.status;
  return 1.0 - std::exp(-p.theta * x) * ml.value;
}

double tml_pdf(const tml_params& p, double x, series_status* status) {
  require(x > 0.0, "tml_pdf: x must be positive");
  const double z = -p.c * std::pow(x, p.a);
  const ml_result m1 = mittag_leffler(p.a, 1.0, 1.0, z);
  const ml_result m2 = mittag_leffler(p.a, p.a, 1.0, z);
  if (status)
    *status = (m1.status == series_status::ok && m2.status == series_status::ok)
                  ? series_status::ok
                  : series_status::degraded;
  return std::exp(-p.theta * x) *
         (p.theta * m1.value +
          p.c * std::pow(x, p.a - 1.0) * m2.value);
}

double tml_laplace(const tml_params& p, double s) {
  require(s >= 0.0, "tml_laplace: s must be nonnegative");
  const double u = p.theta + s;
  return (p.theta * std::pow(u, p.a - 1.0) + p.c) /
         (std::pow(u, p.a) + p.c);
}

double tml_mean(const tml_params& p) {
  return std::pow(p.theta, p.a - 1.0) / (std::pow(p.theta, p.a) + p.c);
}

nb_params::nb_params(double pi_, double kappa_, double alpha_, double mu_)
    : pi(pi_), kappa(kappa_), alpha(alpha_), mu(mu_) {
  require(std::isfinite(pi) && pi > 0.0 && pi < 1.0,
          "nb_params: pi must lie in (0, 1)");
  require(std::isfinite(kappa) && kappa > 0.0,
          "nb_params: kappa must be positive");
  require(std::isfinite(alpha) && alpha > 0.0,
          "nb_params: alpha must be positive");
  require(std::isfinite(mu) && mu >= 0.0, "nb_params: mu must be nonnegative");
}

double nb_log_laplace(const nb_params& p, double s, double t) {
  require(s >= 0.0, "nb_log_laplace: s must be nonnegative");
  require(t > 0.0, "nb_log_laplace: t must be positive");
  const double num = 1.0 - (1.0 - p.pi) * std::exp(-p.alpha * s);
  return -t * (p.kappa * (std::log(num) - std::log(p.pi)) + p.mu * s);
}

double nb_laplace(const nb_params& p, double s, double t) {
  return std::exp(nb_log_laplace(p, s, t));
}

double nb_mean(const nb_params& p, double t) {
  require(t > 0.0, "nb_mean: t must be positive");
  return t * (p.mu + p.kappa * p.alpha * (1.0 - p.pi) / p.pi);
}

double nb_variance(const nb_params& p, double t) {
  require(t > 0.0, "nb_variance: t must be positive");
  return t * p.kappa * (1.0 - p.pi) * p.alpha * p.alpha / (p.pi * p.pi);
}

double nb_jump_pmf(const nb_params& p, int k) {
  require(k >= 1, "nb_jump_pmf: k must be at least 1");
  return -std::pow(1.0 - p.pi, k) / (k * std::log(p.pi));
}

double nb_jump_rate(const nb_params& p) { return -p.kappa * std::log(p.pi); }

double self_similarity_residual(double gamma, double lambda, double delta,
                                double kappa, double c, double H, double s) {
  require(gamma > 0.0 && gamma <= 1.0,
          "self_similarity_residual: gamma must lie in (0, 1]");
  require(lambda > 0.0, "self_similarity_residual: lambda must be positive");
  require(delta > 0.0, "self_similarity_residual: delta must be positive");
  require(kappa > 0.0, "self_similarity_residual: kappa must be positive");
  require(H > 0.0, "self_similarity_residual: H must be positive");
  require(s > 0.0, "self_similarity_residual: s must be positive");
  const double ch = std::pow(c, H);
  require(ch > 1.0, "self_similarity_residual: need c^H > 1");
  const double pi_ = 1.0 / ch;
  const nb_params clock(pi_, kappa, 1.0 / delta, kappa / delta);
  // exponent of the base process per unit time, theta = 0
  const double u = delta * std::log1p(lambda * std::pow(s, gamma));
  const double composed = -nb_log_laplace(clock, u, 1.0);
  const double target = kappa * std::log1p(ch * lambda * std::pow(s, gamma));
  return std::fabs(composed - target);
}

double subordination_residual(const tpl_params& p, double pi_, double kappa,
                              double s, double t) {
  require(pi_ > 0.0 && pi_ < 1.0,
          "subordination_residual: pi must lie in (0, 1)");
  require(kappa > 0.0, "subordination_residual: kappa must be positive");
  require(s >= 0.0, "subordination_residual: s must be nonnegative");
  const nb_params clock(pi_, kappa, 1.0 / p.delta, kappa / p.delta);
  const double u = -tpl_log_laplace(p, s, 1.0);
  const double composed = nb_log_laplace(clock, u, t);
  const tpl_params q(p.gamma, p.lambda / pi_, kappa, p.theta);
  const double target = tpl_log_laplace(q, s, t);
  return std::fabs(composed - target);
}

double nb_gamma_residual(const tpl_params& p, double pi_, double s, double t) {
  require(pi_ > 0.0 && pi_ < 1.0, "nb_gamma_residual: pi must lie in (0, 1)");
  require(s >= 0.0, "nb_gamma_residual: s must be nonnegative");
  // Route: ladder B ~ NB(pi, delta, 1, delta), then G | B gamma with shape B
  // and scale lambda pi, then the stable subordinator at time G.
  const nb_params ladder(pi_, p.delta, 1.0, p.delta);
  const double eta = base_exponent(p.gamma, p.theta, s);
  const double u = std::log1p(p.lambda * pi_ * eta);
  const double composed = nb_log_laplace(ladder, u, t);
  const double target = tpl_log_laplace(p, s, t);
  return std::fabs(composed - target);
}

double gid_residual(const tpl_params& p, double prob, double s) {
  require(prob > 0.0 && prob < 1.0, "gid_residual: prob must lie in (0, 1)");
  require(s >= 0.0, "gid_residual: s must be nonnegative");
  require(p.delta == 1.0, "gid_residual: defined for delta = 1");
  const tpl_params piece(p.gamma, p.lambda * prob, 1.0, p.theta);
  const double lz = tpl_laplace(piece, s, 1.0);
  const double compound = prob * lz / (1.0 - (1.0 - prob) * lz);
  return std::fabs(compound - tpl_laplace(p, s, 1.0));
}

}  // namespace tpl
