#pragma once

#include <cstddef>
#include <vector>

#include "tpl/laws.hpp"
#include "tpl/rng.hpp"
#include "tpl/specfun.hpp"

namespace tpl {

// Uniform grid 0 = t_0 < t_1 < ... < t_steps = horizon.
struct time_grid {
  double horizon;
  std::size_t steps;
  time_grid(double horizon, std::size_t steps);
  double dt() const { return horizon / static_cast<double>(steps); }
  double time(std::size_t i) const {
    return horizon * static_cast<double>(i) / static_cast<double>(steps);
  }
};

struct path {
  std::vector<double> t;  // grid times, steps + 1 entries
  std::vector<double> x;  // state at those times
};

// Construction used for the stationary-increment path of the family law.
//   subordinator:     gamma time change of the stable subordinator (both
//                     regimes; this is the reference construction)
//   compound_poisson: explicit jump representation, minus regime only
//   nb_gamma:         discrete-ladder route through an auxiliary pi
enum class tpl_path_method { subordinator, compound_poisson, nb_gamma };

path tpl_levy_path(rng& g, const tpl_params& p, const time_grid& grid,
                   tpl_path_method method = tpl_path_method::subordinator,
                   double ladder_pi = 0.5);

path nb_path(rng& g, const nb_params& p, const time_grid& grid);

// Mean-reverting process whose stationary law is the family law with the
// given parameters; plus regime with lambda theta^gamma <= 1.  The driver is
// compound Poisson with rate alpha delta gamma and jumps from
// ou_jump_params.  The default scheme is exact on the grid; euler switches
// to the left-point approximation.
struct ou_options {
  double alpha;
  bool euler = false;
  bool stationary_start = true;
  double x0 = 0.0;  // used when stationary_start is false
};

path ou_path(rng& g, const tpl_params& p, const time_grid& grid,
             const ou_options& opt);

tml_params ou_jump_params(const tpl_params& p);

// Laplace exponent per unit time of the driving process, two algebraically
// equal closed forms (kept separate so tests can compare them).
double ou_driver_exponent(const tpl_params& p, double alpha, double s);
double ou_driver_exponent_alt(const tpl_params& p, double alpha, double s);

// Levy density of the driving process.
double ou_background_levy_density(const tpl_params& p, double alpha, double x,
                                  series_status* status = nullptr);

// Self-similar additive process: the marginal at time t is the family law
// with lambda t^(H gamma) and theta t^(-H); increments are independent but
// not stationary.  Plus regime with lambda theta^gamma <= 1.  Jumps below
// eps are dropped and their exact mean is reported as truncation_bias; eps
// large enough to bias the horizon mean by more than ten percent is refused.
struct sato_options {
  double H;
  double eps;
};

struct sato_path_result {
  path p;
  double truncation_bias;
};

sato_path_result sato_path(rng& g, const tpl_params& p, const time_grid& grid,
                           const sato_options& opt);

tpl_params sato_marginal(const tpl_params& p, double H, double t);

// |marginal-law transform at s  -  unit-time transform at s t^H|
double sato_laplace_residual(const tpl_params& p, double H, double t,
                             double s);

}  // namespace tpl
