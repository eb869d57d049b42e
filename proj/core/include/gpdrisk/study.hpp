#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gpdrisk/bayes.hpp"

namespace gpdrisk {

// Estimator columns of the comparison table.
enum class Estimator { mom, pwm, mode_mdi, mode_jeffreys, mean_mdi, mean_jeffreys };

inline constexpr Estimator kAllEstimators[] = {Estimator::mom,           Estimator::pwm,
                                               Estimator::mode_mdi,      Estimator::mode_jeffreys,
                                               Estimator::mean_mdi,      Estimator::mean_jeffreys};

// Column labels: MOM, PWM, MODE/MDI, MODE/JEFF, MEAN/MDI, MEAN/JEFF.
std::string_view label(Estimator e) noexcept;

// Desk-scale chain: 2000 kept draws after 2000 burn-in proposals.
inline McmcConfig desk_mcmc() {
  McmcConfig cfg;
  cfg.n_draws = 2000;
  cfg.burn_in = 2000;
  return cfg;
}

struct StudyScenario {
  std::size_t n = 40;
  double sigma = 1.0;
  double gamma = 0.3;
  std::size_t replications = 1000;
  McmcConfig mcmc = desk_mcmc();
  std::vector<Estimator> estimators{std::begin(kAllEstimators), std::end(kAllEstimators)};
};

// n in {40, 80, 120} x gamma in {-0.2, 0.3, 0.8} at sigma = 1, followed by
// (n = 120, gamma = 0.3, sigma = 0.008).
std::vector<StudyScenario> default_scenarios(std::size_t replications = 1000);

struct CellStats {
  double sse_sigma = 0.0;
  double sse_gamma = 0.0;
  std::size_t used = 0;
  std::size_t failures = 0;

  double rmse_sigma() const;
  double rmse_gamma() const;
};

struct ScenarioResult {
  StudyScenario scenario;
  std::vector<CellStats> cells;  // parallel to scenario.estimators

  const CellStats& cell(Estimator e) const;
};

struct StudyReport {
  std::vector<ScenarioResult> scenarios;
};

struct ReplicationRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
};

double rmse(std::span<const double> estimates, double truth);

// Runs every scenario. Replication r of scenario k draws its data from a seed
// derived from (master_seed, k, r), so any sub-range reproduces exactly the
// replications of the full run. Estimator failures (exceptions, an optimizer
// that did not converge) are counted and excluded from that cell.
StudyReport run_study(std::span<const StudyScenario> scenarios, std::uint64_t master_seed,
                      std::optional<ReplicationRange> range = std::nullopt);

// Pools two reports over disjoint replication ranges of the same scenarios.
StudyReport merge(const StudyReport& a, const StudyReport& b);

}  // namespace gpdrisk
