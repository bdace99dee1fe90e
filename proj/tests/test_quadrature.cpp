#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tpl/quadrature.hpp"

using namespace tpl;

TEST_CASE("integrate_finite handles smooth integrands") {
  const quad_result r = integrate_finite([](double x) { return std::sin(x); },
                                         0.0, M_PI);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.abs_error < 1e-9);
  CHECK(r.levels > 0);
}

TEST_CASE("integrate_finite absorbs endpoint singularities") {
  // Integrable inverse square root at the left endpoint.
  const quad_result r =
      integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
  // Logarithmic singularity.
  const quad_result s =
      integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(s.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("integrate_upper handles exponential tails") {
  const quad_result r =
      integrate_upper([](double x) { return std::exp(-x); }, 0.0);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  // Singular at the lower end and heavy near zero: gamma(1/2) integrand.
  const quad_result s = integrate_upper(
      [](double x) { return std::exp(-x) / std::sqrt(x); }, 0.0);
  CHECK(s.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));
  // Shifted lower limit.
  const quad_result t =
      integrate_upper([](double x) { return std::exp(-x); }, 2.0);
  CHECK(t.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("quadrature rejects bad inputs") {
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 2.0, 1.0),
                  std::invalid_argument);
  const auto bad = [](double x) {
    return x < 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
  };
  CHECK_THROWS_AS(integrate_finite(bad, 0.0, 1.0), std::runtime_error);
}
