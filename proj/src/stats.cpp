#include "tpl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tpl/specfun.hpp"

namespace tpl {

double sample_mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("sample_mean: empty sample");
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2)
    throw std::invalid_argument("sample_variance: need at least two points");
  const double m = sample_mean(xs);
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double d = (x - m) * (x - m);
    const double y = d - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(xs.size() - 1);
}

double ks_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    const double signed_term = (j % 2 == 1) ? term : -term;
    sum += signed_term;
    if (term < 1e-16) break;
  }
  const double q = 2.0 * sum;
  return std::clamp(q, 0.0, 1.0);
}

ks_result ks_one_sample(std::vector<double> xs,
                        const std::function<double(double)>& cdf) {
  const std::size_t n = xs.size();
  if (n == 0) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(xs[i]);
    if (!(f >= -1e-9 && f <= 1.0 + 1e-9))
      throw std::runtime_error("ks_one_sample: cdf outside [0, 1]");
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, f - lo, hi - f});
  }
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  return {d, ks_tail(lambda), n};
}

ks_result ks_two_sample(std::vector<double> xs, std::vector<double> ys) {
  const std::size_t n = xs.size(), m = ys.size();
  if (n == 0 || m == 0)
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    const double v = std::min(xs[i], ys[j]);
    while (i < n && xs[i] <= v) ++i;
    while (j < m && ys[j] <= v) ++j;
    const double fx = static_cast<double>(i) / n;
    const double fy = static_cast<double>(j) / m;
    d = std::max(d, std::fabs(fx - fy));
  }
  const double ne = static_cast<double>(n) * m / static_cast<double>(n + m);
  const double se = std::sqrt(ne);
  const double lambda = (se + 0.12 + 0.11 / se) * d;
  return {d, ks_tail(lambda), std::min(n, m)};
}

namespace {

// Series for P(a,x), good for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k <= 500; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16)
      return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
  }
  throw std::runtime_error("gamma_p: series did not converge");
}

// Continued fraction for Q(a,x), good for x >= a + 1 (modified Lentz).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16)
      return h * std::exp(-x + a * std::log(x) - log_gamma(a));
  }
  throw std::runtime_error("gamma_q: continued fraction did not converge");
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("gamma_p: need a > 0");
  if (!(x >= 0.0)) throw std::invalid_argument("gamma_p: need x >= 0");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("gamma_q: need a > 0");
  if (!(x >= 0.0)) throw std::invalid_argument("gamma_q: need x >= 0");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_tail(double x, int df) {
  if (df <= 0) throw std::invalid_argument("chi_square_tail: need df > 0");
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace tpl
