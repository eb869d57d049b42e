#include "gpdrisk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "gpdrisk/error.hpp"

namespace gpdrisk {

double mean(std::span<const double> xs) {
  if (xs.empty()) raise(ErrorKind::insufficient_data, "mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) {
    raise(ErrorKind::insufficient_data, "sample variance needs at least 2 values");
  }
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

double empirical_quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) raise(ErrorKind::insufficient_data, "quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) {
    raise(ErrorKind::domain, "quantile level must lie in [0,1], got " + to_text(q));
  }
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double empirical_quantile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  return empirical_quantile_sorted(values, q);
}

std::pair<double, double> credible_interval(std::vector<double> values, double level) {
  if (values.empty()) raise(ErrorKind::insufficient_data, "credible interval of an empty sample");
  if (!(level > 0.0 && level < 1.0)) {
    raise(ErrorKind::domain, "credible level must lie in (0,1), got " + to_text(level));
  }
  std::sort(values.begin(), values.end());
  const double tail = 0.5 * (1.0 - level);
  return {empirical_quantile_sorted(values, tail),
          empirical_quantile_sorted(values, 1.0 - tail)};
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    raise(ErrorKind::domain, "normal quantile probability must lie in (0,1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) raise(ErrorKind::insufficient_data, "KS statistic of an empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_pvalue(double statistic, std::size_t n) {
  const double lambda = statistic * std::sqrt(static_cast<double>(n));
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    raise(ErrorKind::insufficient_data, "regression needs two equal-length series of size >= 2");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) raise(ErrorKind::insufficient_data, "regression with constant x");
  return sxy / sxx;
}

}  // namespace gpdrisk
