#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gpdrisk/error.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/study.hpp"

using namespace gpdrisk;
using Catch::Approx;

namespace {

StudyScenario scenario(std::size_t n, double sigma, double gamma, std::size_t reps,
                       std::vector<Estimator> estimators) {
  StudyScenario sc;
  sc.n = n;
  sc.sigma = sigma;
  sc.gamma = gamma;
  sc.replications = reps;
  sc.estimators = std::move(estimators);
  return sc;
}

void check_identical(const StudyReport& a, const StudyReport& b) {
  REQUIRE(a.scenarios.size() == b.scenarios.size());
  for (std::size_t k = 0; k < a.scenarios.size(); ++k) {
    REQUIRE(a.scenarios[k].cells.size() == b.scenarios[k].cells.size());
    for (std::size_t e = 0; e < a.scenarios[k].cells.size(); ++e) {
      CHECK(a.scenarios[k].cells[e].sse_sigma == b.scenarios[k].cells[e].sse_sigma);
      CHECK(a.scenarios[k].cells[e].sse_gamma == b.scenarios[k].cells[e].sse_gamma);
      CHECK(a.scenarios[k].cells[e].used == b.scenarios[k].cells[e].used);
      CHECK(a.scenarios[k].cells[e].failures == b.scenarios[k].cells[e].failures);
    }
  }
}

}  // namespace

TEST_CASE("rmse", "[study]") {
  CHECK(rmse(std::vector<double>{0.2, 0.4}, 0.3) == Approx(0.1).epsilon(1e-12));
  CHECK(rmse(std::vector<double>{0.3}, 0.3) == 0.0);
  CHECK(rmse(std::vector<double>{1, 2, 3}, 0.0) == Approx(2.160246899469287).epsilon(1e-14));
  CHECK_THROWS_AS(rmse(std::vector<double>{}, 0.0), Error);
}

TEST_CASE("estimator labels and default grid", "[study]") {
  CHECK(label(Estimator::mom) == "MOM");
  CHECK(label(Estimator::pwm) == "PWM");
  CHECK(label(Estimator::mode_mdi) == "MODE/MDI");
  CHECK(label(Estimator::mode_jeffreys) == "MODE/JEFF");
  CHECK(label(Estimator::mean_mdi) == "MEAN/MDI");
  CHECK(label(Estimator::mean_jeffreys) == "MEAN/JEFF");

  const auto grid = default_scenarios(7);
  REQUIRE(grid.size() == 10);
  CHECK(grid[0].n == 40);
  CHECK(grid[0].gamma == -0.2);
  CHECK(grid[8].n == 120);
  CHECK(grid[8].gamma == 0.8);
  CHECK(grid[9].n == 120);
  CHECK(grid[9].sigma == 0.008);
  CHECK(grid[9].gamma == 0.3);
  for (const auto& sc : grid) {
    CHECK(sc.replications == 7);
    CHECK(sc.estimators.size() == 6);
    CHECK(sc.mcmc.n_draws == 2000);
  }
}

TEST_CASE("one replication reports the single squared error", "[study]") {
  const std::vector<StudyScenario> scs{scenario(80, 1.0, 0.3, 1, {Estimator::pwm})};
  const StudyReport report = run_study(scs, 77);
  const CellStats& cell = report.scenarios[0].cell(Estimator::pwm);
  REQUIRE(cell.used == 1);

  Rng rng(derive_seed(77, {0, 0}));
  const FitResult fit = fit_pwm(ExceedanceSample::from_excesses(sample({0, 1.0, 0.3}, 80, rng)));
  CHECK(cell.sse_gamma == (fit.gamma - 0.3) * (fit.gamma - 0.3));
  CHECK(cell.sse_sigma == (fit.sigma - 1.0) * (fit.sigma - 1.0));
  CHECK(cell.rmse_gamma() == Approx(std::abs(fit.gamma - 0.3)));
}

TEST_CASE("moment estimator error at n = 80", "[study][slow]") {
  const std::vector<StudyScenario> scs{scenario(80, 1.0, 0.3, 1000, {Estimator::mom})};
  const StudyReport report = run_study(scs, 2014);
  const CellStats& cell = report.scenarios[0].cell(Estimator::mom);
  CHECK(cell.used + cell.failures == 1000);
  CHECK(cell.rmse_gamma() == Approx(0.154).epsilon(0.2));
}

TEST_CASE("study determinism and range pooling", "[study]") {
  const std::vector<StudyScenario> scs{
      scenario(40, 1.0, 0.3, 24, {Estimator::mom, Estimator::mode_mdi, Estimator::mean_jeffreys}),
      scenario(80, 1.0, -0.2, 24, {Estimator::pwm, Estimator::mean_mdi})};

  const StudyReport full = run_study(scs, 5);
  check_identical(full, run_study(scs, 5));

  const StudyReport merged = merge(run_study(scs, 5, ReplicationRange{0, 10}),
                                   run_study(scs, 5, ReplicationRange{10, 24}));
  for (std::size_t k = 0; k < scs.size(); ++k) {
    for (std::size_t e = 0; e < scs[k].estimators.size(); ++e) {
      const CellStats& f = full.scenarios[k].cells[e];
      const CellStats& m = merged.scenarios[k].cells[e];
      CHECK(m.used == f.used);
      CHECK(m.failures == f.failures);
      CHECK(m.rmse_sigma() == Approx(f.rmse_sigma()).epsilon(1e-12));
      CHECK(m.rmse_gamma() == Approx(f.rmse_gamma()).epsilon(1e-12));
    }
  }

  const StudyReport other = run_study(scs, 6);
  CHECK(other.scenarios[0].cells[0].sse_gamma != full.scenarios[0].cells[0].sse_gamma);
}

TEST_CASE("scale error tracks the scale parameter", "[study][slow]") {
  const std::vector<Estimator> ests{Estimator::mom, Estimator::pwm, Estimator::mode_mdi,
                                    Estimator::mean_mdi};
  const std::vector<StudyScenario> unit{scenario(120, 1.0, 0.3, 200, ests)};
  const std::vector<StudyScenario> small{scenario(120, 0.008, 0.3, 200, ests)};
  const StudyReport a = run_study(unit, 31);
  const StudyReport b = run_study(small, 32);
  for (Estimator e : ests) {
    const double ratio = b.scenarios[0].cell(e).rmse_sigma() / a.scenarios[0].cell(e).rmse_sigma();
    CHECK(ratio == Approx(0.008).epsilon(0.2));
  }
}

TEST_CASE("error shrinks with sample size for most seeds", "[study][slow]") {
  const std::vector<Estimator> ests{Estimator::mom, Estimator::pwm, Estimator::mode_mdi};
  for (double gamma : {-0.2, 0.3}) {
    std::vector<StudyScenario> scs;
    for (std::size_t n : {40u, 80u, 120u}) scs.push_back(scenario(n, 1.0, gamma, 150, ests));
    for (Estimator e : ests) {
      int ordered = 0;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const StudyReport r = run_study(scs, seed * 101);
        const double g40 = r.scenarios[0].cell(e).rmse_gamma();
        const double g80 = r.scenarios[1].cell(e).rmse_gamma();
        const double g120 = r.scenarios[2].cell(e).rmse_gamma();
        if (g40 > g80 && g80 > g120) ++ordered;
      }
      INFO(label(e) << " gamma=" << gamma);
      CHECK(ordered >= 3);
    }
  }
}
