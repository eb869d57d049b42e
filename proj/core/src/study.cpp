#include "gpdrisk/study.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpdrisk/error.hpp"
#include "gpdrisk/estimators.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/random.hpp"

namespace gpdrisk {

namespace {

std::optional<FitResult> run_estimator(Estimator e, const ExceedanceSample& s,
                                       const McmcConfig& mcmc) {
  try {
    FitResult fit;
    switch (e) {
      case Estimator::mom: fit = fit_mom(s); break;
      case Estimator::pwm: fit = fit_pwm(s); break;
      case Estimator::mode_mdi: fit = posterior_mode(s, Prior::mdi); break;
      case Estimator::mode_jeffreys: fit = posterior_mode(s, Prior::jeffreys); break;
      case Estimator::mean_mdi:
        return posterior_mean_fit(s, Prior::mdi, metropolis(s, Prior::mdi, mcmc));
      case Estimator::mean_jeffreys:
        return posterior_mean_fit(s, Prior::jeffreys, metropolis(s, Prior::jeffreys, mcmc));
    }
    if (!fit.converged) return std::nullopt;
    return fit;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view label(Estimator e) noexcept {
  switch (e) {
    case Estimator::mom: return "MOM";
    case Estimator::pwm: return "PWM";
    case Estimator::mode_mdi: return "MODE/MDI";
    case Estimator::mode_jeffreys: return "MODE/JEFF";
    case Estimator::mean_mdi: return "MEAN/MDI";
    case Estimator::mean_jeffreys: return "MEAN/JEFF";
  }
  return "?";
}

std::vector<StudyScenario> default_scenarios(std::size_t replications) {
  std::vector<StudyScenario> out;
  for (std::size_t n : {40, 80, 120}) {
    for (double gamma : {-0.2, 0.3, 0.8}) {
      StudyScenario sc;
      sc.n = n;
      sc.gamma = gamma;
      sc.sigma = 1.0;
      sc.replications = replications;
      out.push_back(sc);
    }
  }
  StudyScenario scaled;
  scaled.n = 120;
  scaled.gamma = 0.3;
  scaled.sigma = 0.008;
  scaled.replications = replications;
  out.push_back(scaled);
  return out;
}

double CellStats::rmse_sigma() const {
  return used == 0 ? std::nan("") : std::sqrt(sse_sigma / static_cast<double>(used));
}

double CellStats::rmse_gamma() const {
  return used == 0 ? std::nan("") : std::sqrt(sse_gamma / static_cast<double>(used));
}

const CellStats& ScenarioResult::cell(Estimator e) const {
  const auto it = std::find(scenario.estimators.begin(), scenario.estimators.end(), e);
  if (it == scenario.estimators.end()) {
    raise(ErrorKind::invalid_argument, "estimator " + std::string(label(e)) + " was not run");
  }
  return cells[static_cast<std::size_t>(it - scenario.estimators.begin())];
}

double rmse(std::span<const double> estimates, double truth) {
  if (estimates.empty()) raise(ErrorKind::insufficient_data, "rmse of an empty set of estimates");
  double sse = 0.0;
  for (double e : estimates) sse += (e - truth) * (e - truth);
  return std::sqrt(sse / static_cast<double>(estimates.size()));
}

StudyReport run_study(std::span<const StudyScenario> scenarios, std::uint64_t master_seed,
                      std::optional<ReplicationRange> range) {
  StudyReport report;
  for (std::size_t k = 0; k < scenarios.size(); ++k) {
    const StudyScenario& sc = scenarios[k];
    if (sc.replications < 1 || sc.n < 2) {
      raise(ErrorKind::invalid_argument, "study scenario needs replications >= 1 and n >= 2");
    }
    sc.mcmc.validate();
    const GpdParams truth{0.0, sc.sigma, sc.gamma};
    truth.validate();

    ScenarioResult result{sc, std::vector<CellStats>(sc.estimators.size())};
    const std::size_t begin = range ? range->begin : 0;
    const std::size_t end = range ? std::min(range->end, sc.replications) : sc.replications;

    for (std::size_t r = begin; r < end; ++r) {
      const std::uint64_t rep_seed = derive_seed(master_seed, {k, r});
      Rng rng(rep_seed);
      const ExceedanceSample s = ExceedanceSample::from_excesses(sample(truth, sc.n, rng));
      for (std::size_t e = 0; e < sc.estimators.size(); ++e) {
        McmcConfig mcmc = sc.mcmc;
        mcmc.seed = derive_seed(rep_seed, {static_cast<std::uint64_t>(sc.estimators[e])});
        const auto fit = run_estimator(sc.estimators[e], s, mcmc);
        CellStats& cell = result.cells[e];
        if (!fit) {
          ++cell.failures;
          continue;
        }
        cell.sse_sigma += (fit->sigma - sc.sigma) * (fit->sigma - sc.sigma);
        cell.sse_gamma += (fit->gamma - sc.gamma) * (fit->gamma - sc.gamma);
        ++cell.used;
      }
    }
    report.scenarios.push_back(std::move(result));
  }
  return report;
}

StudyReport merge(const StudyReport& a, const StudyReport& b) {
  if (a.scenarios.size() != b.scenarios.size()) {
    raise(ErrorKind::invalid_argument, "merge: reports cover different scenarios");
  }
  StudyReport out = a;
  for (std::size_t k = 0; k < out.scenarios.size(); ++k) {
    auto& cells = out.scenarios[k].cells;
    const auto& other = b.scenarios[k].cells;
    if (cells.size() != other.size()) {
      raise(ErrorKind::invalid_argument, "merge: reports use different estimators");
    }
    for (std::size_t e = 0; e < cells.size(); ++e) {
      cells[e].sse_sigma += other[e].sse_sigma;
      cells[e].sse_gamma += other[e].sse_gamma;
      cells[e].used += other[e].used;
      cells[e].failures += other[e].failures;
    }
  }
  return out;
}

}  // namespace gpdrisk
