#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tpl/laws.hpp"
#include "tpl/rng.hpp"
#include "tpl/samplers.hpp"
#include "tpl/stats.hpp"

using namespace tpl;

namespace {

template <typename F>
std::vector<double> draw(std::uint64_t seed, std::size_t n, F f) {
  rng g(seed, 0);
  std::vector<double> xs(n);
  for (double& x : xs) x = f(g);
  return xs;
}

}  // namespace

TEST_CASE("samplers are deterministic per seed") {
  rng a(5, 1), b(5, 1);
  const tpl_params p(0.7, 0.5, 1.5, 0.5);
  for (int i = 0; i < 32; ++i) CHECK(sample_tpl(a, p) == sample_tpl(b, p));
}

TEST_CASE("gamma variates match their moments") {
  const auto xs = draw(11, 20000, [](rng& g) { return sample_gamma(g, 2.5, 1.5); });
  const double se_mean = std::sqrt(2.5 * 1.5 * 1.5 / 20000.0);
  CHECK(std::fabs(sample_mean(xs) - 3.75) < 5.0 * se_mean);
  CHECK(sample_variance(xs) == doctest::Approx(5.625).epsilon(0.08));
  // Small shapes exercise the boosting branch.
  const auto ys = draw(12, 20000, [](rng& g) { return sample_gamma(g, 0.3); });
  CHECK(std::fabs(sample_mean(ys) - 0.3) < 5.0 * std::sqrt(0.3 / 20000.0));
  for (double y : ys) CHECK(y > 0.0);
  CHECK_THROWS_AS(draw(1, 1, [](rng& g) { return sample_gamma(g, 0.0); }),
                  std::invalid_argument);
}

TEST_CASE("one-sided stable variates follow the half-order law") {
  // At a = 1/2 the positive stable law has cdf erfc(1 / (2 sqrt(x))).
  auto xs = draw(13, 5000, [](rng& g) { return sample_stable(g, 0.5); });
  const ks_result r = ks_one_sample(
      xs, [](double x) { return std::erfc(1.0 / (2.0 * std::sqrt(x))); });
  CHECK(r.p_value > 0.001);
  // Degenerate boundary: a = 1 is the unit constant.
  rng g(14, 0);
  for (int i = 0; i < 8; ++i) CHECK(sample_stable(g, 1.0) == 1.0);
  CHECK_THROWS_AS(sample_stable(g, 1.5), std::invalid_argument);
}

TEST_CASE("poisson variates obey mean and variance in both branches") {
  for (double mean : {3.0, 40.0}) {
    const auto xs =
        draw(15, 20000, [mean](rng& g) { return double(sample_poisson(g, mean)); });
    CHECK(std::fabs(sample_mean(xs) - mean) < 5.0 * std::sqrt(mean / 20000.0));
    CHECK(sample_variance(xs) == doctest::Approx(mean).epsilon(0.08));
  }
}

TEST_CASE("logarithmic variates have the right pmf shape") {
  const double q = 0.6;
  const auto xs =
      draw(16, 40000, [q](rng& g) { return double(sample_logarithmic(g, q)); });
  double min = 1e300;
  for (double x : xs) min = std::min(min, x);
  CHECK(min == 1.0);
  const double mean = -q / ((1.0 - q) * std::log1p(-q));
  CHECK(sample_mean(xs) == doctest::Approx(mean).epsilon(0.03));
  // Frequency of ones matches p(1) = -q / log(1 - q).
  double ones = 0.0;
  for (double x : xs) ones += (x == 1.0);
  CHECK(ones / xs.size() ==
        doctest::Approx(-q / std::log1p(-q)).epsilon(0.03));
}

TEST_CASE("geometric variates start at one") {
  const double prob = 0.3;
  const auto xs =
      draw(17, 30000, [prob](rng& g) { return double(sample_geometric(g, prob)); });
  double min = 1e300;
  for (double x : xs) min = std::min(min, x);
  CHECK(min == 1.0);
  CHECK(sample_mean(xs) == doctest::Approx(1.0 / prob).epsilon(0.03));
}

TEST_CASE("tempered stable sampler covers both regimes") {
  // Pure drift at gamma = 1.
  rng g(18, 0);
  CHECK(sample_tps(g, tps_params(1.0, 0.7), 2.5) == 2.5);
  // Untempered case: check the transform at one point by monte carlo.
  const auto xs = draw(
      19, 20000, [](rng& g2) { return sample_tps(g2, tps_params(0.5, 0.0), 1.0); });
  double acc = 0.0;
  for (double x : xs) acc += std::exp(-x);
  const double expect = std::exp(-1.0);
  CHECK(acc / xs.size() == doctest::Approx(expect).epsilon(0.02));
  // Tempered case against the closed transform.
  const tps_params p(0.6, 0.8);
  const auto ys =
      draw(20, 20000, [&](rng& g2) { return sample_tps(g2, p, 1.0); });
  double acc2 = 0.0;
  for (double y : ys) acc2 += std::exp(-0.7 * y);
  CHECK(acc2 / ys.size() == doctest::Approx(tps_laplace(p, 0.7)).epsilon(0.02));
}

TEST_CASE("tempered stable single-shot guards its rejection budget") {
  rng g(21, 0);
  CHECK_THROWS_WITH_AS(sample_tps_once(g, tps_params(0.5, 1.0), 100.0),
                       doctest::Contains("split the time argument"),
                       std::runtime_error);
  // The splitting wrapper handles the same argument fine.
  CHECK(sample_tps(g, tps_params(0.5, 1.0), 100.0) > 0.0);
}

TEST_CASE("tpl sampler reduces to gamma at unit order") {
  const tpl_params p(1.0, 0.5, 2.0, 1.5);
  auto xs = draw(22, 5000, [&](rng& g) { return sample_tpl(g, p); });
  const ks_result r = ks_one_sample(
      xs, [&](double x) { return gamma_p(2.0, x / 0.5); });
  CHECK(r.p_value > 0.001);
}

TEST_CASE("tpl sampler produces the atom in the negative-order regime") {
  const tpl_params p(-1.0, 1.0, 1.0, 1.0);
  const auto xs = draw(23, 20000, [&](rng& g) { return sample_tpl(g, p); });
  double zeros = 0.0;
  for (double x : xs) {
    CHECK(x >= 0.0);
    zeros += (x == 0.0);
  }
  // Atom frequency 1/2 within five standard errors.
  CHECK(std::fabs(zeros / xs.size() - 0.5) <
        5.0 * std::sqrt(0.25 / 20000.0));
}

TEST_CASE("mixture exponential sampler matches its transform") {
  const lml_params p(0.7, 0.21, 0.5);
  const auto xs = draw(24, 20000, [&](rng& g) { return sample_lml(g, p); });
  double acc = 0.0;
  for (double x : xs) acc += std::exp(-x);
  CHECK(acc / xs.size() == doctest::Approx(lml_laplace(p, 1.0)).epsilon(0.02));
  // c = 0 collapses to a gamma law.
  const lml_params q(0.7, 0.0, 2.0);
  auto ys = draw(25, 5000, [&](rng& g) { return sample_lml(g, q); });
  const ks_result r =
      ks_one_sample(ys, [](double x) { return gamma_p(0.7, 2.0 * x); });
  CHECK(r.p_value > 0.001);
}

TEST_CASE("tempered linnik sampler agrees with its cdf") {
  const tml_params p(0.7, 0.3, 1.0);
  auto xs = draw(26, 5000, [&](rng& g) { return sample_tml(g, p); });
  const ks_result r =
      ks_one_sample(xs, [&](double x) { return tml_cdf(p, x); });
  CHECK(r.p_value > 0.001);
  // Unit order is exponential with the summed rate.
  const tml_params e(1.0, 0.5, 1.5);
  auto ys = draw(27, 5000, [&](rng& g) { return sample_tml(g, e); });
  const ks_result re =
      ks_one_sample(ys, [](double x) { return -std::expm1(-2.0 * x); });
  CHECK(re.p_value > 0.001);
}

TEST_CASE("nb sampler keeps the drift floor and the lattice") {
  const nb_params p(0.5, 1.0, 0.5, 0.7);
  const double t = 1.3;
  const auto xs = draw(28, 20000, [&](rng& g) { return sample_nb(g, p, t); });
  const double floor = p.mu * t;
  for (double x : xs) {
    CHECK(x >= floor - 1e-12);
    // Jump part lives on the alpha lattice.
    const double k = (x - floor) / p.alpha;
    CHECK(std::fabs(k - std::round(k)) < 1e-9);
  }
  const double se = std::sqrt(nb_variance(p, t) / 20000.0);
  CHECK(std::fabs(sample_mean(xs) - nb_mean(p, t)) < 5.0 * se);
}
