#pragma once

#include "tpl/specfun.hpp"

namespace tpl {

// Sign regime of the family: plus has an absolutely continuous law with
// infinite jump activity, minus has finite activity and an atom at zero.
enum class regime { plus, minus };

// Parameters (gamma, lambda, delta, theta).  Valid region:
//   gamma in (0, 1], theta >= 0   (plus)
//   gamma < 0,       theta > 0    (minus)
// lambda > 0 and delta > 0 in both regimes.  delta scales linearly in time:
// the law at time t has delta replaced by t * delta throughout.
struct tpl_params {
  double gamma, lambda, delta, theta;
  tpl_params(double gamma, double lambda, double delta, double theta);
  regime sign_regime() const { return gamma > 0.0 ? regime::plus : regime::minus; }
};

// Tempering constant for the series representations:
//   plus:  (lambda theta^gamma - 1) / lambda
//   minus: lambda / (1 + lambda theta^gamma)
double c_coefficient(double gamma, double lambda, double theta);
double c_coefficient(const tpl_params& p);

// Laplace transform at time t: E exp(-s X_t), defined for s >= 0.
double tpl_log_laplace(const tpl_params& p, double s, double t = 1.0);
double tpl_laplace(const tpl_params& p, double s, double t = 1.0);

// Density at time t, plus regime only (gamma in (0, 1], including 1), x > 0.
// The minus-regime law has an atom at zero and no closed-form density here;
// asking for it is a domain error.
double tpl_pdf(const tpl_params& p, double x, double t = 1.0,
               series_status* status = nullptr);

// P(X_t = 0): positive only in the minus regime.
double tpl_point_mass(const tpl_params& p, double t = 1.0);

// Levy density u(x), x > 0.  In the plus regime the representation is only
// valid for lambda theta^gamma <= 1; larger values are a domain error.
double tpl_levy_density(const tpl_params& p, double x,
                        series_status* status = nullptr);

// Total jump intensity: finite in the minus regime, infinite in plus.
double tpl_levy_mass(const tpl_params& p);

// n-th cumulant of X_t, n >= 1, via the exact polynomial recursion.  The
// recursion variable must satisfy |x| < 1; outside that a domain error names
// the offending value.
double tpl_cumulant(const tpl_params& p, int n, double t = 1.0);
// Recursion variable itself (exposed for diagnostics and tests).
double tpl_cumulant_ratio(const tpl_params& p);

// Closed forms, valid in both regimes for theta > 0.
double tpl_mean(const tpl_params& p, double t = 1.0);
double tpl_variance(const tpl_params& p, double t = 1.0);

// Tempered positive stable subordinator, unit scale: the law at time t has
// Laplace transform exp(-t sgn(gamma) ((theta + s)^gamma - theta^gamma)).
struct tps_params {
  double gamma, theta;
  tps_params(double gamma, double theta);
  regime sign_regime() const { return gamma > 0.0 ? regime::plus : regime::minus; }
};

double tps_log_laplace(const tps_params& p, double s, double t = 1.0);
double tps_laplace(const tps_params& p, double s, double t = 1.0);
double tps_mean(const tps_params& p, double t = 1.0);
double tps_variance(const tps_params& p, double t = 1.0);

// q-resolvent density of the unit-scale subordinator, plus regime only:
// v_q(x) = e^(-theta x) x^(gamma-1) E_{gamma,gamma}((theta^gamma - q) x^gamma).
// Its Laplace transform is 1 / (q + (theta+s)^gamma - theta^gamma).
double tps_potential_density(const tps_params& p, double q, double x,
                             series_status* status = nullptr);

// Logarithmic mixture law with shape a > 0, tilt c, rate theta > 0, on the
// region |c| < theta^a.  c = 0 degenerates to gamma(a, theta).
struct lml_params {
  double a, c, theta;
  lml_params(double a, double c, double theta);
};

// Normalizing constant -a c / log(1 - c theta^(-a)), continuous at c = 0.
double lml_normalizer(const lml_params& p);
double lml_pdf(const lml_params& p, double x, series_status* status = nullptr);
double lml_laplace(const lml_params& p, double s);
double lml_mean(const lml_params& p);

// Tempered Mittag-Leffler law: shape a in (0, 1], tilt c >= 0, rate
// theta > 0.  a = 1 reduces to Exp(theta + c).
struct tml_params {
  double a, c, theta;
  tml_params(double a, double c, double theta);
};

double tml_cdf(const tml_params& p, double x, series_status* status = nullptr);
double tml_pdf(const tml_params& p, double x, series_status* status = nullptr);
double tml_laplace(const tml_params& p, double s);
double tml_mean(const tml_params& p);

// Discrete-ladder subordinator: drift mu >= 0 plus compound Poisson jumps on
// the lattice alpha N, with pi in (0, 1), kappa > 0, alpha > 0.
struct nb_params {
  double pi, kappa, alpha, mu;
  nb_params(double pi, double kappa, double alpha, double mu);
};

double nb_log_laplace(const nb_params& p, double s, double t = 1.0);
double nb_laplace(const nb_params& p, double s, double t = 1.0);
double nb_mean(const nb_params& p, double t = 1.0);
double nb_variance(const nb_params& p, double t = 1.0);
// P(single jump = alpha k), k = 1, 2, ...
double nb_jump_pmf(const nb_params& p, int k);
// Jump arrival intensity per unit time: -kappa log pi.
double nb_jump_rate(const nb_params& p);

// Transform-level identity residuals.  Each returns the absolute difference
// between the two sides of a closure identity at a single point; the tests
// drive these over grids and expect agreement near machine precision.

// Discrete-ladder time change of a Linnik process (theta = 0) produces a
// scaled Linnik transform: compares the composed exponent against
// kappa log(1 + c^H lambda s^gamma).  Needs c^H > 1 for a valid ladder.
double self_similarity_residual(double gamma, double lambda, double delta,
                                double kappa, double c, double H, double s);

// Discrete-ladder time change of a process with parameters p and clock
// NB(pi_, kappa, 1/p.delta, kappa/p.delta) lands back in the family with
// lambda / pi_ and shape kappa.
double subordination_residual(const tpl_params& p, double pi_, double kappa,
                              double s, double t = 1.0);

// Ladder-gamma-stable sampling route transform versus the direct transform.
double nb_gamma_residual(const tpl_params& p, double pi_, double s,
                         double t = 1.0);

// Geometric-compound closure at delta = 1: a geometric (mean 1/prob) sum of
// laws with lambda * prob reproduces the law with lambda.
double gid_residual(const tpl_params& p, double prob, double s);

}  // namespace tpl
