#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tpl {

double sample_mean(const std::vector<double>& xs);
// Unbiased (n-1 denominator); needs at least two points.
double sample_variance(const std::vector<double>& xs);

struct ks_result {
  double statistic;  // sup-norm distance D
  double p_value;    // asymptotic, with finite-n effective scaling
  std::size_t n;
};

// One-sample test against a continuous cdf.  The cdf is called once per
// sorted sample point, in increasing order, so stateful incremental
// evaluators are fine.
ks_result ks_one_sample(std::vector<double> xs,
                        const std::function<double(double)>& cdf);

// Two-sample test; ties across the pooled sample are handled by comparing
// the empirical cdfs just after each pooled point.
ks_result ks_two_sample(std::vector<double> xs, std::vector<double> ys);

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double ks_tail(double lambda);

// Regularized incomplete gamma P(a,x) and Q(a,x) = 1 - P(a,x), a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// P(X > x) for a chi-square with df degrees of freedom.
double chi_square_tail(double x, int df);

}  // namespace tpl
