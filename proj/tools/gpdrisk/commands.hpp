#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gpdrisk::cli {

struct ChainFlags {
  std::size_t draws = 10000;
  std::size_t burnin = 2000;
  std::size_t thin = 1;
  std::uint64_t seed = 1;
};

struct ReturnsArgs {
  std::string prices;
};

struct FitArgs {
  std::string losses;
  double threshold = 0.033;
  std::string method = "mean";
  std::optional<std::string> prior;
  bool chain_flags_given = false;
  ChainFlags chain;
};

struct RiskArgs {
  std::string losses;
  double threshold = 0.033;
  std::string prior = "mdi";
  std::vector<double> horizons{10, 50, 100, 200, 500, 1000, 2500, 5000, 10000};
  double level = 0.95;
  std::string point = "mean";
  ChainFlags chain;
};

struct SweepArgs {
  RiskArgs risk;
  std::vector<double> thresholds{0.025, 0.030, 0.033};
  std::size_t min_exceedances = 10;
  std::string out_dir;
};

struct DiagArgs {
  std::string losses;
  std::string out_dir;
};

struct StudyArgs {
  std::size_t replications = 1000;
  std::uint64_t seed = 1;
  std::string scenarios = "default";
  std::size_t draws = 2000;
  std::size_t burnin = 2000;
};

struct SimulateArgs {
  double mu = 0.0;
  double sigma = 1.0;
  double gamma = 0.0;
  std::size_t n = 100;
  std::uint64_t seed = 1;
};

struct FixtureArgs {
  std::size_t days = 2500;
  std::size_t exceedances = 100;
  double threshold = 0.033;
  double tail_sigma = 0.008;
  double tail_gamma = 0.3;
  std::string start = "2002-08-01";
  bool losses_only = false;
  std::uint64_t seed = 1;
};

// Each command returns the text destined for standard output.
std::string run_returns(const ReturnsArgs& a);
std::string run_fit(const FitArgs& a);
std::string run_risk(const RiskArgs& a);
std::string run_sweep(const SweepArgs& a);
std::string run_diag(const DiagArgs& a);
std::string run_study(const StudyArgs& a);
std::string run_simulate(const SimulateArgs& a);
std::string run_fixture(const FixtureArgs& a);

}  // namespace gpdrisk::cli
