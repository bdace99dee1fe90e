#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "tpl/specfun.hpp"

using namespace tpl;

TEST_CASE("mittag-leffler reproduces the exponential at a = 1") {
  for (double z : {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    const ml_result r = mittag_leffler(1.0, 1.0, 1.0, z);
    CHECK(r.status == series_status::ok);
    CHECK(r.value == doctest::Approx(std::exp(z)).epsilon(1e-13));
  }
}

TEST_CASE("mittag-leffler golden values") {
  // E_{1,2}(2) = (e^2 - 1) / 2.
  CHECK(ml2(1.0, 2.0, 2.0) ==
        doctest::Approx(3.194528049465325113615214).epsilon(1e-13));
  // E_{1/2}(-1) = e erfc(1).
  CHECK(ml1(0.5, -1.0) ==
        doctest::Approx(0.4275835761558070044107503).epsilon(1e-12));
  // E_{1/2}(-z) = exp(z^2) erfc(z) for z > 0, in the well conditioned range.
  for (double z : {0.25, 1.0, 2.25}) {
    const ml_result r = mittag_leffler(0.5, 1.0, 1.0, -z);
    CHECK(r.status == series_status::ok);
    CHECK(r.value ==
          doctest::Approx(std::exp(z * z) * std::erfc(z)).epsilon(1e-11));
  }
  CHECK(ml1(0.3, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("three-parameter mittag-leffler collapses at a = 1, b = c + 1") {
  // E^2_{1,2}(z) = e^z and E^3_{1,3}(z) = e^z / 2; both follow from the
  // Pochhammer/gamma cancellation in the series.
  for (double z : {-2.0, 0.5, 1.0, 3.0}) {
    CHECK(mittag_leffler(1.0, 2.0, 2.0, z).value ==
          doctest::Approx(std::exp(z)).epsilon(1e-12));
    CHECK(mittag_leffler(1.0, 3.0, 3.0, z).value ==
          doctest::Approx(std::exp(z) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("mittag-leffler satisfies the b-shift recurrence") {
  // E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z).
  for (double a : {0.4, 0.8}) {
    for (double b : {1.0, 1.7}) {
      for (double z : {-1.5, -0.5, 0.5, 2.0}) {
        const double lhs = ml2(a, b, z);
        const double rhs = 1.0 / std::tgamma(b) + z * ml2(a, a + b, z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("mittag-leffler flags cancellation and range problems") {
  // Outside the trust radius the alternating series loses most digits but
  // still sums in range; the result is flagged rather than silently wrong.
  CHECK(mittag_leffler(0.5, 1.0, 1.0, -16.0).status == series_status::degraded);
  CHECK(mittag_leffler(0.7, 1.0, 1.0, ml_z_max + 10.0).status ==
        series_status::degraded);
  // Far enough out the intermediate terms overflow and the call refuses.
  CHECK_THROWS_AS(ml1(0.5, -40.0), std::domain_error);
  CHECK_THROWS_AS(ml1(0.1, 500.0), std::domain_error);
  CHECK_THROWS_AS(ml1(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(ml1(-0.3, 0.5), std::domain_error);
}

TEST_CASE("mittag-leffler reports a usable tail bound") {
  const ml_result r = mittag_leffler(0.6, 1.0, 1.0, 1.5);
  CHECK(r.status == series_status::ok);
  CHECK(r.terms > 0);
  CHECK(r.tail_bound >= 0.0);
  CHECK(r.tail_bound < 1e-10);
}

TEST_CASE("log_gamma matches reference values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  CHECK(log_gamma(10.5) ==
        doctest::Approx(13.94062521940376363316124).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_rgamma covers poles and the negative axis") {
  // 1/Gamma(-0.5) = -1/(2 sqrt(pi)).
  const signed_log r = log_rgamma(-0.5);
  CHECK(r.sign == -1);
  CHECK(r.log_abs == doctest::Approx(-1.265512123484645396488946).epsilon(1e-13));
  for (double x : {0.0, -1.0, -2.0, -7.0}) {
    CHECK(log_rgamma(x).sign == 0);
  }
  const signed_log p = log_rgamma(3.0);
  CHECK(p.sign == 1);
  CHECK(p.log_abs == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("sin_pi is exact at integers and stable for large arguments") {
  CHECK(sin_pi(0.0) == 0.0);
  CHECK(sin_pi(-3.0) == 0.0);
  CHECK(sin_pi(1e6) == 0.0);
  CHECK(sin_pi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sin_pi(1e6 + 0.25) ==
        doctest::Approx(std::sin(M_PI * 0.25)).epsilon(1e-12));
  CHECK(sin_pi(-0.5) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("expint_e1 matches reference values") {
  CHECK(expint_e1(1.0) ==
        doctest::Approx(0.2193839343955202736771638).epsilon(1e-13));
  CHECK(expint_e1(0.1) ==
        doctest::Approx(1.822923958419390666080914).epsilon(1e-13));
  CHECK(expint_e1(10.0) ==
        doctest::Approx(4.15696892968532427740286e-6).epsilon(1e-12));
  CHECK_THROWS_AS(expint_e1(0.0), std::domain_error);
  CHECK_THROWS_AS(expint_e1(-1.0), std::domain_error);
}

TEST_CASE("fox_wright_2psi1 sums the geometric ray exactly") {
  // With a = p and b = q the gamma factors cancel term by term and the series
  // telescopes to s^(-b) / (1 - c s^(-a)).
  const double a = 0.5, b = 2.0, c = 0.3, s = 1.44;
  const double expect = std::pow(s, -b) / (1.0 - c * std::pow(s, -a));
  CHECK(fox_wright_2psi1(a, b, a, b, c, s) ==
        doctest::Approx(expect).epsilon(1e-12));
  // Alternating variant converges as well.
  const double expect_neg = std::pow(s, -b) / (1.0 + c * std::pow(s, -a));
  CHECK(fox_wright_2psi1(a, b, a, b, -c, s) ==
        doctest::Approx(expect_neg).epsilon(1e-12));
}

TEST_CASE("fox_wright_2psi1 refuses divergent configurations") {
  CHECK_THROWS_AS(fox_wright_2psi1(1.5, 1.0, 1.0, 1.0, 0.5, 2.0),
                  std::domain_error);
  // On the a == p ray the ratio |c| / s^a must stay below one.
  CHECK_THROWS_AS(fox_wright_2psi1(0.5, 1.0, 0.5, 1.0, 1.2, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(fox_wright_2psi1(0.5, 1.0, 0.5, 1.0, 0.5, -1.0),
                  std::domain_error);
  CHECK_THROWS_AS(fox_wright_2psi1(-0.5, 1.0, 0.5, 1.0, 0.5, 1.0),
                  std::domain_error);
}
