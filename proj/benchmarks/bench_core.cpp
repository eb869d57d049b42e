#include <benchmark/benchmark.h>

#include "gpdrisk/gpdrisk.hpp"

namespace {

using namespace gpdrisk;

ExceedanceSample make_sample(std::size_t n) {
  Rng rng(derive_seed(1, {n}));
  return ExceedanceSample::from_excesses(sample({0, 1.0, 0.3}, n, rng));
}

void BM_LogPosterior(benchmark::State& state) {
  const ExceedanceSample s = make_sample(static_cast<std::size_t>(state.range(0)));
  double sigma = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_posterior(s, Prior::mdi, sigma, 0.3));
    sigma += 1e-12;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogPosterior)->Arg(100)->Arg(1000);

void BM_FitMle(benchmark::State& state) {
  const ExceedanceSample s = make_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_mle(s));
}
BENCHMARK(BM_FitMle)->Arg(80)->Arg(1000);

void BM_FitPwm(benchmark::State& state) {
  const ExceedanceSample s = make_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_pwm(s));
}
BENCHMARK(BM_FitPwm)->Arg(80)->Arg(1000);

void BM_Metropolis(benchmark::State& state) {
  const ExceedanceSample s = make_sample(100);
  McmcConfig cfg;
  cfg.n_draws = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(metropolis(s, Prior::mdi, cfg));
}
BENCHMARK(BM_Metropolis)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BayesRiskCurve(benchmark::State& state) {
  const SyntheticMarket m;
  const std::vector<double> losses = synthetic_losses(m);
  const ExceedanceSample s = extract_exceedances(losses, m.threshold);
  const PosteriorDraws d = metropolis(s, Prior::mdi, McmcConfig{});
  const RiskQuery q = RiskQuery::from_horizons({100, 200, 1000, 2500, 10000});
  const auto point = state.range(0) == 0 ? PointEstimate::mean_of_draws
                                         : PointEstimate::predictive_quantile;
  for (auto _ : state) benchmark::DoNotOptimize(bayes_risk_curve(d, s, q, point));
}
BENCHMARK(BM_BayesRiskCurve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
