// Timing comparison between the serial replicate loop and the partitioned
// parallel ensemble driver, plus a byte-identity check on their outputs.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "tpl/ensemble.hpp"
#include "tpl/laws.hpp"
#include "tpl/samplers.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <class F>
void bench(const char* name, std::size_t n, F&& f) {
  const std::uint64_t seed = 20260822, stream0 = 7;

  auto t0 = clock_type::now();
  const std::vector<double> serial = tpl::ensemble_serial(n, seed, stream0, f);
  const double ts = seconds_since(t0);

  t0 = clock_type::now();
  const std::vector<double> parallel = tpl::ensemble_run(n, seed, stream0, f);
  const double tp = seconds_since(t0);

  const bool identical =
      serial.size() == parallel.size() &&
      std::memcmp(serial.data(), parallel.data(),
                  serial.size() * sizeof(double)) == 0;

  std::printf("%-24s n=%zu serial %.3fs parallel %.3fs speedup %.2fx %s\n",
              name, n, ts, tp, ts / tp,
              identical ? "byte-identical" : "MISMATCH");
}

}  // namespace

int main() {
  const std::size_t n = 200000;

  const tpl::tpl_params plus(0.5, 1, 2, 1);
  bench("tpl plus regime", n,
        [plus](tpl::rng& g) { return sample_tpl(g, plus, 1.0); });

  const tpl::tpl_params minus(-1, 1, 1, 1);
  bench("tpl minus regime", n,
        [minus](tpl::rng& g) { return sample_tpl(g, minus, 1.0); });

  const tpl::tml_params tml(0.7, 0.3, 1.0);
  bench("tml exact sampler", n,
        [tml](tpl::rng& g) { return sample_tml(g, tml); });

  const tpl::nb_params nb(0.5, 1, 1, 0.5);
  bench("nb increment", n,
        [nb](tpl::rng& g) { return sample_nb(g, nb, 1.0); });

  return 0;
}
