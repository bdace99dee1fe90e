#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tpl/laws.hpp"
#include "tpl/mvtpl.hpp"
#include "tpl/rng.hpp"
#include "tpl/stats.hpp"

using namespace tpl;

TEST_CASE("mv_params validation") {
  CHECK_NOTHROW(mv_params({-1.0, -2.0}, {1.0, 2.0}, {0.5, 1.0}, 1.0, 0.5));
  CHECK_NOTHROW(mv_params({0.5}, {1.0}, {1.0}, 2.0, 1.0));
  CHECK_THROWS_AS(mv_params({-1.0}, {1.0, 2.0}, {1.0}, 1.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(mv_params({}, {}, {}, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(mv_params({-1.0}, {1.0}, {1.0}, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(mv_params({-1.0}, {1.0}, {1.0}, 1.0, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(mv_params({-1.0}, {1.0}, {1.0}, 0.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(mv_params({0.0}, {1.0}, {1.0}, 1.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("one-dimensional exponent collapses to the scalar transform") {
  const mv_params p({-1.0}, {1.0}, {1.0}, 1.2, 0.25);
  const tpl_params m = mv_marginal(p, 0, 1.0);
  CHECK(m.lambda == doctest::Approx(4.0).epsilon(1e-14));
  for (double s : {0.1, 0.7, 2.0, 5.0}) {
    CHECK(mv_exponent(p, {s}) ==
          doctest::Approx(-tpl_log_laplace(m, s)).epsilon(1e-13));
  }
}

TEST_CASE("exponent vanishes at the origin and laplace is one there") {
  const mv_params p({-1.0, -2.2}, {1.0, 10.0}, {1.0, 0.5}, 1.0, 0.3);
  CHECK(mv_exponent(p, {0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(mv_laplace(p, {0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(mv_laplace(p, {1.0, 1.0}, 2.0) ==
        doctest::Approx(std::exp(-2.0 * mv_exponent(p, {1.0, 1.0}))).epsilon(1e-13));
  CHECK_THROWS_AS(mv_exponent(p, {1.0}), std::invalid_argument);
}

TEST_CASE("full coupling keeps the marginals, independence splits the exponent") {
  const mv_params p({-1.0, 0.5}, {1.0, 1.0}, {1.0, 1.0}, 1.0, 1.0);
  // At pi = 1 the mixing clock is deterministic and components decouple.
  for (double s1 : {0.3, 1.0}) {
    for (double s2 : {0.5, 2.0}) {
      const double joint = mv_exponent(p, {s1, s2});
      const double split = mv_exponent(p, {s1, 0.0}) + mv_exponent(p, {0.0, s2});
      CHECK(joint == doctest::Approx(split).epsilon(1e-13));
    }
  }
}

TEST_CASE("marginal scaling absorbs the mixing weight") {
  const mv_params p({-2.2, -2.2}, {10.0, 10.0}, {0.5, 0.5}, 1.0, 0.01);
  const tpl_params m = mv_marginal(p, 1, 1.5);
  CHECK(m.gamma == doctest::Approx(-2.2));
  CHECK(m.lambda == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(m.theta == doctest::Approx(0.5));
  CHECK(m.delta == doctest::Approx(1.5).epsilon(1e-14));
  // The joint transform restricted to one axis equals the marginal transform.
  for (double s : {0.2, 1.0, 3.0}) {
    CHECK(std::exp(-1.5 * mv_exponent(p, {0.0, s})) ==
          doctest::Approx(tpl_laplace(m, s)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(mv_marginal(p, 2, 1.0), std::invalid_argument);
}

TEST_CASE("exponent slope at the origin recovers the marginal mean") {
  // The exponent needs nonnegative arguments, so differentiate one-sidedly.
  const mv_params p({-1.0, 0.5}, {1.0, 1.0}, {1.0, 1.0}, 1.0, 0.5);
  const double h = 1e-4;
  const auto slope = [&](std::size_t i) {
    const auto at = [&](double s) {
      std::vector<double> v{0.0, 0.0};
      v[i] = s;
      return mv_exponent(p, v);
    };
    return (-3.0 * at(0.0) + 4.0 * at(h) - at(2.0 * h)) / (2.0 * h);
  };
  CHECK(slope(0) ==
        doctest::Approx(tpl_mean(mv_marginal(p, 0, 1.0))).epsilon(1e-6));
  CHECK(slope(1) ==
        doctest::Approx(tpl_mean(mv_marginal(p, 1, 1.0))).epsilon(1e-6));
}

TEST_CASE("unit-order components make the exponent log-affine") {
  const mv_params p({1.0, 1.0}, {0.5, 2.0}, {1.0, 1.0}, 1.4, 0.6);
  for (double s1 : {0.2, 1.0}) {
    for (double s2 : {0.4, 2.5}) {
      const double w1 = 0.5 * s1, w2 = 2.0 * s2;
      const double expect =
          1.4 * std::log1p(((1.0 + w1) * (1.0 + w2) - 1.0) / 0.6);
      CHECK(mv_exponent(p, {s1, s2}) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("joint atom has the closed-form frequency") {
  // d = 2, all-minus with unit parameters and pi = 1/2 gives mass
  // exp(-log(1 + 3/0.5)) = 1/7.
  const mv_params p({-1.0, -1.0}, {1.0, 1.0}, {1.0, 1.0}, 1.0, 0.5);
  CHECK(mv_zero_mass(p, 1.0) == doctest::Approx(1.0 / 7.0).epsilon(1e-13));
  // Mixed-regime vectors carry no atom.
  const mv_params q({-1.0, 0.5}, {1.0, 1.0}, {1.0, 1.0}, 1.0, 0.5);
  CHECK(mv_zero_mass(q, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("levy and mixing densities are positive where defined") {
  const mv_params p({-1.0, -1.0}, {1.0, 2.0}, {1.0, 0.5}, 1.0, 0.5);
  CHECK(mv_levy_density(p, {0.5, 1.0}) > 0.0);
  CHECK(mv_rho_density(p, {0.7, 1.2}) > 0.0);
  CHECK_THROWS_AS(mv_levy_density(p, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(mv_rho_density(p, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("sampler output matches dimensions and stays nonnegative") {
  const mv_params p({-2.2, -2.2}, {10.0, 10.0}, {0.5, 0.5}, 1.0, 0.01);
  rng g(51, 0);
  const std::vector<double> x = mv_sample(g, p, 1.0);
  REQUIRE(x.size() == 2);
  for (double v : x) CHECK(v >= 0.0);
  rng a(52, 3), b(52, 3);
  CHECK(mv_sample(a, p, 1.0) == mv_sample(b, p, 1.0));
}

TEST_CASE("coupled minus-regime demo scenario") {
  rng g(20260822, 0);
  const mv_scenario sc = fig2_scenario(g);
  REQUIRE(sc.x1.size() == 5000);
  REQUIRE(sc.x2.size() == 5000);
  CHECK(sc.correlation > 0.9);
  CHECK(sc.correlation <= 1.0);
  CHECK(sc.zero_freq1 >= 0.0);
  CHECK(sc.zero_freq1 < 0.01);
  CHECK(sc.zero_freq2 < 0.01);
  // Deterministic given the seed.
  rng g2(20260822, 0);
  const mv_scenario sc2 = fig2_scenario(g2);
  CHECK(sc.x1 == sc2.x1);
  CHECK(sc.correlation == sc2.correlation);
}
