#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpdrisk/bayes.hpp"
#include "gpdrisk/estimators.hpp"
#include "gpdrisk/risk.hpp"

namespace gpdrisk {

// Losses strictly above `threshold`, shifted by it. Throws
// insufficient_data when fewer than `minimum` losses exceed the threshold.
ExceedanceSample extract_exceedances(std::span<const double> losses, double threshold,
                                     std::size_t minimum = 2);

struct MeanExcessPoint {
  double u;
  double mean_excess;
  std::size_t n_above;
};

// e(u) = mean(x - u | x > u) for every distinct loss except the largest.
std::vector<MeanExcessPoint> mean_excess_data(std::span<const double> losses);

// Pareto quantile plot pairs (ln((n+1)/i), ln x_(n-i+1)), i = 1..n, over the
// positive losses only. i = 1 pairs the largest theoretical quantile with
// the largest observation.
std::vector<std::pair<double, double>> pareto_quantile_data(std::span<const double> losses);

struct SweepEntry {
  double threshold = 0.0;
  std::size_t n_exceed = 0;
  std::uint64_t seed = 0;
  std::optional<FitResult> fit;  // posterior mean
  std::optional<double> acceptance_rate;
  std::optional<RiskCurve> curve;
  std::optional<std::string> error;  // set when this threshold could not be fitted
};

struct ThresholdSweep {
  std::vector<SweepEntry> entries;
};

struct SweepOptions {
  std::size_t min_exceedances = 10;
  PointEstimate point = PointEstimate::mean_of_draws;
};

// Fits every threshold independently. Each entry's chain seed is derived
// from cfg.seed and the threshold index; failures are recorded per entry.
ThresholdSweep sweep(std::span<const double> losses, std::span<const double> thresholds,
                     Prior prior, const McmcConfig& cfg, const RiskQuery& q,
                     const SweepOptions& options = {});

}  // namespace gpdrisk
