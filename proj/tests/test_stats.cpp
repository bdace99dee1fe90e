#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tpl/rng.hpp"
#include "tpl/stats.hpp"

using namespace tpl;

TEST_CASE("sample moments match hand values") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  CHECK(sample_mean(xs) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(sample_variance(xs) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(sample_mean({}), std::invalid_argument);
  CHECK_THROWS_AS(sample_variance({1.0}), std::invalid_argument);
}

TEST_CASE("ks_tail behaves like a survival function") {
  // The series is accurate from about 0.3 upward, which covers every
  // statistic a test at usual sizes can produce.
  CHECK(ks_tail(0.3) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(ks_tail(4.0) < 1e-12);
  double prev = 1.0 + 1e-12;
  for (double t = 0.3; t < 2.0; t += 0.1) {
    const double p = ks_tail(t);
    CHECK(p <= prev);
    prev = p;
  }
  // Hand-summed reference points.
  CHECK(ks_tail(0.5) == doctest::Approx(0.9639452438).epsilon(1e-8));
  CHECK(ks_tail(1.0) == doctest::Approx(0.2699996717).epsilon(1e-8));
}

TEST_CASE("ks_one_sample statistic is exact on a lattice sample") {
  // Points k/10 for k = 1..9 against the uniform cdf give D = 0.1.
  std::vector<double> xs;
  for (int k = 1; k <= 9; ++k) xs.push_back(k / 10.0);
  const ks_result r = ks_one_sample(xs, [](double x) { return x; });
  CHECK(r.n == 9);
  CHECK(r.statistic == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("ks_one_sample separates right from wrong models") {
  rng g(42, 1);
  std::vector<double> xs(5000);
  for (double& x : xs) x = g.exponential();
  const auto exp_cdf = [](double x) { return -std::expm1(-x); };
  const auto halfrate_cdf = [](double x) { return -std::expm1(-0.5 * x); };
  CHECK(ks_one_sample(xs, exp_cdf).p_value > 0.001);
  CHECK(ks_one_sample(xs, halfrate_cdf).p_value < 1e-10);
}

TEST_CASE("ks_two_sample flags identical and disjoint samples") {
  rng g(8, 2);
  std::vector<double> xs(2000), ys(2000), zs(2000);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = g.exponential();
    ys[i] = g.exponential();
    zs[i] = xs[i] + 100.0;
  }
  CHECK(ks_two_sample(xs, ys).p_value > 0.001);
  const ks_result far = ks_two_sample(xs, zs);
  CHECK(far.statistic == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(far.p_value < 1e-12);
  CHECK(ks_two_sample(xs, xs).statistic == doctest::Approx(0.0));
}

TEST_CASE("regularized gamma functions match references") {
  CHECK(gamma_p(1.0, 1.0) == doctest::Approx(-std::expm1(-1.0)).epsilon(1e-12));
  CHECK(gamma_q(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // P(1/2, x) = erf(sqrt(x)).
  for (double x : {0.25, 1.0, 4.0}) {
    CHECK(gamma_p(0.5, x) ==
          doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-11));
  }
  for (double a : {0.3, 1.7, 6.0}) {
    for (double x : {0.1, 2.0, 9.0}) {
      CHECK(gamma_p(a, x) + gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(gamma_p(2.0, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(gamma_p(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_p(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("chi_square_tail reduces to the exponential for two degrees") {
  for (double x : {0.5, 2.0, 7.0}) {
    CHECK(chi_square_tail(x, 2) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
  }
  CHECK(chi_square_tail(0.0, 4) == doctest::Approx(1.0));
}
