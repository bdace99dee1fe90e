#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace tpl {

struct quad_result {
  double value;
  double abs_error;  // last refinement delta
  int levels;
};

namespace detail {

inline constexpr double quad_half_pi = 1.57079632679489661923;

// Shared progressive driver: sum f over the double-exponential abscissas at
// step h = 2^-level until two refinements agree.  point(t) must fill x and
// weight; it returns false for nodes whose weight underflowed, which
// terminates the sweep in that direction.
template <class Point, class F>
quad_result de_integrate(F&& f, Point&& point, double t_max, double tol,
                         const char* what) {
  double prev = 0.0;
  for (int level = 0; level <= 11; ++level) {
    const double h = std::ldexp(1.0, -level);
    double sum = 0.0;
    for (int dir = 0; dir < 2; ++dir) {
      const double sign = dir == 0 ? 1.0 : -1.0;
      for (int k = dir; ; ++k) {
        const double t = sign * k * h;
        if (std::fabs(t) > t_max) break;
        double x, w;
        if (!point(t, x, w)) break;
        const double fx = f(x);
        if (!std::isfinite(fx))
          throw std::runtime_error(std::string(what) +
                                   ": integrand not finite inside the domain");
        sum += w * fx;
      }
    }
    sum *= h;
    if (level >= 3) {
      const double err = std::fabs(sum - prev);
      if (err <= tol * std::fabs(sum) + 1e-300)
        return {sum, err, level};
    }
    prev = sum;
  }
  throw std::runtime_error(std::string(what) + ": no convergence");
}

}  // namespace detail

// tanh-sinh rule on (a, b).  Integrable endpoint singularities are fine; the
// abscissas approach the endpoints double-exponentially and are computed as
// offsets from the nearer endpoint to keep x - a (resp. b - x) accurate.
template <class F>
quad_result integrate_finite(F&& f, double a, double b, double tol = 1e-10) {
  if (!(a < b)) throw std::invalid_argument("integrate_finite: need a < b");
  const double half = 0.5 * (b - a);
  auto point = [&](double t, double& x, double& w) {
    const double u = detail::quad_half_pi * std::sinh(t);
    const double e2u = std::exp(2.0 * u);
    const double da = 2.0 * half * e2u / (1.0 + e2u);  // x - a
    const double db = 2.0 * half / (1.0 + e2u);        // b - x
    x = da < db ? a + da : b - db;
    if (x <= a || x >= b) return false;
    // dx/dt = half * (pi/2) cosh t * sech^2(u)
    const double sech2 = 4.0 * e2u / ((1.0 + e2u) * (1.0 + e2u));
    w = half * detail::quad_half_pi * std::cosh(t) * sech2;
    return w > 0.0;
  };
  return detail::de_integrate(f, point, 3.8, tol, "integrate_finite");
}

// exp-sinh rule on (a, infinity) for integrands decaying at infinity; an
// integrable singularity at a is handled the same way as above.
template <class F>
quad_result integrate_upper(F&& f, double a, double tol = 1e-10) {
  auto point = [&](double t, double& x, double& w) {
    const double u = detail::quad_half_pi * std::sinh(t);
    const double ex = std::exp(u);
    x = a + ex;
    if (!(ex > 0.0) || !std::isfinite(x) || x <= a) return false;
    w = detail::quad_half_pi * std::cosh(t) * ex;
    return std::isfinite(w);
  };
  return detail::de_integrate(f, point, 4.0, tol, "integrate_upper");
}

}  // namespace tpl
