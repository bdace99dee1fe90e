#pragma once

#include <cstdint>

#include "tpl/laws.hpp"
#include "tpl/rng.hpp"

namespace tpl {

// gamma(shape, scale), Marsaglia-Tsang squeeze with the boost
// G(a) = G(a + 1) U^(1/a) for shape < 1.
double sample_gamma(rng& g, double shape, double scale = 1.0);

// Positive stable with Laplace transform exp(-s^a), a in (0, 1]; a = 1 is
// the constant 1.
double sample_stable(rng& g, double a);

std::int64_t sample_poisson(rng& g, double mean);

// P(K = k) = -q^k / (k log(1 - q)), k >= 1, q in (0, 1).
std::int64_t sample_logarithmic(rng& g, double q);

// P(K = k) = p (1 - p)^(k - 1), k >= 1.
std::int64_t sample_geometric(rng& g, double p);

// Stable subordinator increment over time t in one rejection pass (plus
// regime).  Expected trials are exp(t theta^gamma); beyond 30 this refuses
// with a runtime error quoting the expected count, and sample_tps below is
// the slicing wrapper that keeps each pass cheap.
double sample_tps_once(rng& g, const tps_params& p, double t);

// Subordinator increment over time t, either regime.  Plus slices t so each
// pass stays within budget; minus draws the compound Poisson form directly.
double sample_tps(rng& g, const tps_params& p, double t);

double sample_tpl(rng& g, const tpl_params& p, double t = 1.0);

double sample_lml(rng& g, const lml_params& p);

double sample_tml(rng& g, const tml_params& p);

// Subordinator increment over time t: drift mu t plus a Poisson number of
// lattice jumps.
double sample_nb(rng& g, const nb_params& p, double t = 1.0);

}  // namespace tpl
