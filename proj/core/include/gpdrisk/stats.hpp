#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace gpdrisk {

double mean(std::span<const double> xs);

// Unbiased (n - 1) sample variance. Requires at least two values.
double sample_variance(std::span<const double> xs);

// Empirical quantile by linear interpolation between order statistics at the
// 1-based position q(n-1)+1. `sorted` must be ascending and non-empty.
double empirical_quantile_sorted(std::span<const double> sorted, double q);
double empirical_quantile(std::vector<double> values, double q);

// Equal-tailed interval at `level` under the same quantile convention.
std::pair<double, double> credible_interval(std::vector<double> values, double level);

// Standard Normal inverse CDF.
double normal_quantile(double p);

// Two-sided Kolmogorov-Smirnov statistic of a sample against an analytic CDF.
double ks_statistic(std::vector<double> values,
                    const std::function<double(double)>& cdf);

// Asymptotic p-value P(sqrt(n) D > d sqrt(n)) from the Kolmogorov series.
double ks_pvalue(double statistic, std::size_t n);

// Ordinary least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

}  // namespace gpdrisk
