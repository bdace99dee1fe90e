#pragma once

#include <cstdint>
#include <vector>

#include "tpl/rng.hpp"

namespace tpl {

// Monte Carlo ensembles draw replicate i from its own stream stream0 + i, so
// the result is a pure function of (n, seed, stream0, f) and does not depend
// on thread count or scheduling.  f takes an rng& and returns one replicate.

template <class F>
std::vector<double> ensemble_serial(std::size_t n, std::uint64_t seed,
                                    std::uint64_t stream0, F&& f) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    rng g(seed, stream0 + i);
    out[i] = f(g);
  }
  return out;
}

// Parallel kernel; byte-identical to ensemble_serial.
template <class F>
std::vector<double> ensemble_run(std::size_t n, std::uint64_t seed,
                                 std::uint64_t stream0, F&& f) {
#ifdef _OPENMP
  std::vector<double> out(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    rng g(seed, stream0 + static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = f(g);
  }
  return out;
#else
  return ensemble_serial(n, seed, stream0, f);
#endif
}

}  // namespace tpl
