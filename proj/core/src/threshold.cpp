#include "gpdrisk/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpdrisk/error.hpp"
#include "gpdrisk/random.hpp"

namespace gpdrisk {

ExceedanceSample extract_exceedances(std::span<const double> losses, double threshold,
                                     std::size_t minimum) {
  std::vector<double> excesses;
  for (double x : losses) {
    if (x > threshold) excesses.push_back(x - threshold);
  }
  if (excesses.size() < std::max<std::size_t>(minimum, 1)) {
    raise(ErrorKind::insufficient_data,
          "threshold " + to_text(threshold) + " leaves " + std::to_string(excesses.size()) +
              " exceedances, need at least " + std::to_string(minimum));
  }
  return ExceedanceSample(threshold, std::move(excesses), losses.size());
}

std::vector<MeanExcessPoint> mean_excess_data(std::span<const double> losses) {
  std::vector<double> sorted(losses.begin(), losses.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || sorted.front() == sorted.back()) {
    raise(ErrorKind::insufficient_data, "mean excess data needs at least 2 distinct losses");
  }
  // suffix[i] = sum of sorted[i..]
  std::vector<double> suffix(sorted.size() + 1, 0.0);
  for (std::size_t i = sorted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];

  std::vector<MeanExcessPoint> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double u = sorted[i];
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == u) ++j;
    if (j == sorted.size()) break;  // u is the maximum
    const std::size_t above = sorted.size() - j;
    const double e = suffix[j] / static_cast<double>(above) - u;
    out.push_back({u, e, above});
    i = j;
  }
  return out;
}

std::vector<std::pair<double, double>> pareto_quantile_data(std::span<const double> losses) {
  std::vector<double> positive;
  for (double x : losses) {
    if (x > 0.0) positive.push_back(x);
  }
  if (positive.size() < 2) {
    raise(ErrorKind::insufficient_data, "Pareto quantile plot needs at least 2 positive losses");
  }
  std::sort(positive.begin(), positive.end(), std::greater<>());
  const double n = static_cast<double>(positive.size());
  std::vector<std::pair<double, double>> out;
  out.reserve(positive.size());
  for (std::size_t i = 1; i <= positive.size(); ++i) {
    out.emplace_back(std::log((n + 1.0) / static_cast<double>(i)), std::log(positive[i - 1]));
  }
  return out;
}

ThresholdSweep sweep(std::span<const double> losses, std::span<const double> thresholds,
                     Prior prior, const McmcConfig& cfg, const RiskQuery& q,
                     const SweepOptions& options) {
  cfg.validate();
  q.validate();
  ThresholdSweep result;
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    SweepEntry entry;
    entry.threshold = thresholds[k];
    entry.seed = derive_seed(cfg.seed, {k});
    entry.n_exceed = static_cast<std::size_t>(std::count_if(
        losses.begin(), losses.end(), [&](double x) { return x > entry.threshold; }));
    try {
      const ExceedanceSample s =
          extract_exceedances(losses, entry.threshold, options.min_exceedances);
      McmcConfig entry_cfg = cfg;
      entry_cfg.seed = entry.seed;
      const PosteriorDraws draws = metropolis(s, prior, entry_cfg);
      entry.fit = posterior_mean_fit(s, prior, draws);
      entry.acceptance_rate = draws.acceptance_rate;
      entry.curve = risk_curve_with_baselines(draws, s, losses, q, options.point);
    } catch (const Error& e) {
      entry.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace gpdrisk
