#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <functional>

#include "commands.hpp"
#include "gpdrisk/error.hpp"

namespace {

using namespace gpdrisk::cli;

void add_chain_flags(CLI::App* cmd, ChainFlags& f, std::vector<CLI::Option*>* given = nullptr) {
  std::vector<CLI::Option*> opts{
      cmd->add_option("--draws", f.draws, "Kept posterior draws")->capture_default_str(),
      cmd->add_option("--burnin", f.burnin, "Burn-in proposals")->capture_default_str(),
      cmd->add_option("--thin", f.thin, "Keep every k-th state")->capture_default_str(),
      cmd->add_option("--seed", f.seed, "Random seed")->capture_default_str(),
  };
  if (given) *given = opts;
}

void add_risk_flags(CLI::App* cmd, RiskArgs& r) {
  cmd->add_option("losses", r.losses, "Loss CSV ('-' for stdin)")->required();
  cmd->add_option("--prior", r.prior, "mdi|jeffreys|uniform")->capture_default_str();
  cmd->add_option("--horizons", r.horizons, "Trading days per expected exceedance")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--level", r.level, "Credible level of the bands")->capture_default_str();
  cmd->add_option("--point", r.point, "Point curve: mean (of per-draw VaR) | predictive")
      ->capture_default_str();
  add_chain_flags(cmd, r.chain);
}

void fail(std::string_view kind, std::string_view message) {
  fmt::print(stderr, "error: {}: {}\n", kind, message);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peaks-over-threshold GPD fitting and tail risk"};
  app.require_subcommand(1);

  std::function<std::string()> action;

  ReturnsArgs returns_args;
  auto* returns = app.add_subcommand("returns", "Daily losses (negated log returns) from prices");
  returns->add_option("prices", returns_args.prices, "Price CSV with date,close")->required();
  returns->callback([&] { action = [&] { return run_returns(returns_args); }; });

  FitArgs fit_args;
  std::vector<CLI::Option*> fit_chain;
  auto* fit = app.add_subcommand("fit", "Fit the GPD to exceedances of a threshold");
  fit->add_option("losses", fit_args.losses, "Loss CSV ('-' for stdin)")->required();
  fit->add_option("--threshold", fit_args.threshold, "Exceedance threshold")->capture_default_str();
  fit->add_option("--method", fit_args.method, "mom|pwm|mle|mode|mean")->capture_default_str();
  fit->add_option("--prior", fit_args.prior, "mdi|jeffreys|uniform (mode/mean only)");
  add_chain_flags(fit, fit_args.chain, &fit_chain);
  fit->callback([&] {
    for (const CLI::Option* o : fit_chain) fit_args.chain_flags_given |= o->count() > 0;
    action = [&] { return run_fit(fit_args); };
  });

  RiskArgs risk_args;
  auto* risk = app.add_subcommand("risk", "Bayesian VaR/ES curve with historical and Normal baselines");
  risk->add_option("--threshold", risk_args.threshold, "Exceedance threshold")->capture_default_str();
  add_risk_flags(risk, risk_args);
  risk->callback([&] { action = [&] { return run_risk(risk_args); }; });

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("sweep", "Risk curves over several thresholds");
  sw->add_option("--thresholds", sweep_args.thresholds, "Thresholds")
      ->delimiter(',')
      ->capture_default_str();
  sw->add_option("--min-exceedances", sweep_args.min_exceedances, "Minimum exceedances per threshold")
      ->capture_default_str();
  sw->add_option("--out-dir", sweep_args.out_dir, "Directory for the per-threshold CSVs")->required();
  add_risk_flags(sw, sweep_args.risk);
  sw->callback([&] { action = [&] { return run_sweep(sweep_args); }; });

  DiagArgs diag_args;
  auto* diag = app.add_subcommand("diag", "Mean-excess and Pareto quantile plot data");
  diag->add_option("losses", diag_args.losses, "Loss CSV ('-' for stdin)")->required();
  diag->add_option("--out-dir", diag_args.out_dir, "Output directory")->required();
  diag->callback([&] { action = [&] { return run_diag(diag_args); }; });

  StudyArgs study_args;
  auto* study = app.add_subcommand("study", "Monte Carlo RMSE comparison of the estimators");
  study->add_option("--replications", study_args.replications, "Replications per scenario")
      ->capture_default_str();
  study->add_option("--seed", study_args.seed, "Master seed")->capture_default_str();
  study->add_option("--scenarios", study_args.scenarios, "'default' or a CSV with n,sigma,gamma")
      ->capture_default_str();
  study->add_option("--draws", study_args.draws, "Kept draws per posterior-mean fit")
      ->capture_default_str();
  study->add_option("--burnin", study_args.burnin, "Burn-in per posterior-mean fit")
      ->capture_default_str();
  study->callback([&] { action = [&] { return run_study(study_args); }; });

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Raw GPD sample");
  sim->add_option("--mu", sim_args.mu, "Location")->capture_default_str();
  sim->add_option("--sigma", sim_args.sigma, "Scale")->capture_default_str();
  sim->add_option("--gamma", sim_args.gamma, "Shape")->capture_default_str();
  sim->add_option("-n", sim_args.n, "Sample size")->capture_default_str();
  sim->add_option("--seed", sim_args.seed, "Random seed")->capture_default_str();
  sim->callback([&] { action = [&] { return run_simulate(sim_args); }; });

  FixtureArgs fx_args;
  auto* fx = app.add_subcommand("fixture", "Synthetic index prices: Normal body plus GPD tail");
  fx->add_option("--days", fx_args.days, "Number of daily losses")->capture_default_str();
  fx->add_option("--exceedances", fx_args.exceedances, "Days above the threshold")
      ->capture_default_str();
  fx->add_option("--threshold", fx_args.threshold, "Threshold")->capture_default_str();
  fx->add_option("--tail-sigma", fx_args.tail_sigma, "GPD scale of the excesses")
      ->capture_default_str();
  fx->add_option("--tail-gamma", fx_args.tail_gamma, "GPD shape of the excesses")
      ->capture_default_str();
  fx->add_option("--start", fx_args.start, "First date (YYYY-MM-DD)")->capture_default_str();
  fx->add_flag("--losses", fx_args.losses_only, "Emit date,loss instead of date,close");
  fx->add_option("--seed", fx_args.seed, "Random seed")->capture_default_str();
  fx->callback([&] { action = [&] { return run_fixture(fx_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("invalid_argument", e.what());
    return 2;
  }

  try {
    const std::string out = action();
    std::fwrite(out.data(), 1, out.size(), stdout);
    return std::fflush(stdout) == 0 ? 0 : 1;
  } catch (const gpdrisk::Error& e) {
    fail(gpdrisk::to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    fail("internal", e.what());
  }
  return 1;
}
