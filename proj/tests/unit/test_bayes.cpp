#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "gpdrisk/bayes.hpp"
#include "gpdrisk/error.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/stats.hpp"
#include "oracles.hpp"

using namespace gpdrisk;
using Catch::Approx;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

ExceedanceSample gpd_sample(double sigma, double gamma, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return ExceedanceSample::from_excesses(sample({0, sigma, gamma}, n, rng));
}

// Log posterior under the MDI prior written out term by term.
double mdi_log_posterior_oracle(const ExceedanceSample& s, double sigma, double gamma) {
  const double n = static_cast<double>(s.n_exceed());
  double sum = 0.0;
  for (double x : s.excesses()) {
    const double base = 1.0 + gamma * x / sigma;
    if (base <= 0.0) return kNegInf;
    sum += std::log(base);
  }
  return -(n + 1.0) * std::log(sigma) - (1.0 / gamma + 1.0) * sum + gamma;
}

McmcConfig config(std::size_t draws, std::uint64_t seed) {
  McmcConfig cfg;
  cfg.n_draws = draws;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("log posterior values", "[bayes]") {
  const ExceedanceSample one = ExceedanceSample::from_excesses({1.0});
  CHECK(log_posterior(one, Prior::mdi, 1.0, 1.0) == Approx(1.0 - 2.0 * std::log(2.0)).epsilon(1e-14));
  for (Prior p : {Prior::mdi, Prior::jeffreys, Prior::uniform}) {
    CHECK(log_posterior(one, p, -1.0, 0.2) == kNegInf);
    CHECK(log_posterior(one, p, 0.0, 0.2) == kNegInf);
  }
  // 1 + gamma x / sigma <= 0
  CHECK(log_posterior(one, Prior::uniform, 1.0, -1.5) == kNegInf);
}

TEST_CASE("priors separate from the likelihood", "[bayes][property]") {
  const ExceedanceSample s = gpd_sample(1.0, 0.1, 50, 9);
  for (double sigma = 0.2; sigma < 3.0; sigma += 0.35) {
    for (double gamma = -0.45; gamma < 1.5; gamma += 0.1) {
      const double ll = log_likelihood(s.excesses(), sigma, gamma);
      if (!std::isfinite(ll)) continue;
      CHECK(log_posterior(s, Prior::uniform, sigma, gamma) - ll == 0.0);
      CHECK(log_posterior(s, Prior::uniform, sigma, gamma) - log_posterior(s, Prior::mdi, sigma, gamma) ==
            Approx(std::log(sigma) - gamma).margin(1e-9));
      const double oracle = mdi_log_posterior_oracle(s, sigma, gamma);
      CHECK(log_posterior(s, Prior::mdi, sigma, gamma) == Approx(oracle).epsilon(1e-10));
    }
  }
}

TEST_CASE("Jeffreys prior domain", "[bayes]") {
  CHECK(log_prior(Prior::jeffreys, 1.0, -0.5) == kNegInf);
  CHECK(log_prior(Prior::jeffreys, 1.0, -0.6) == kNegInf);
  CHECK(log_prior(Prior::jeffreys, 2.0, 0.5) ==
        Approx(-std::log(2.0) - std::log(1.5) - 0.5 * std::log(2.0)));

  // Data from a bounded tail close to the prior's edge: no stored draw may cross it.
  const ExceedanceSample s = gpd_sample(1.0, -0.4, 40, 5);
  McmcConfig cfg = config(5000, 3);
  cfg.proposal_scale_gamma = 0.3;
  const PosteriorDraws d = metropolis(s, Prior::jeffreys, cfg);
  for (const Draw& draw : d.draws) REQUIRE(draw.gamma > -0.5);
}

TEST_CASE("posterior mode", "[bayes][mode]") {
  SECTION("uniform prior reproduces the MLE") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const ExceedanceSample s = gpd_sample(1.0, 0.3, 80, seed);
      const FitResult mode = posterior_mode(s, Prior::uniform);
      const FitResult mle = fit_mle(s);
      CHECK(std::abs(mode.sigma - mle.sigma) < 1e-6);
      CHECK(std::abs(mode.gamma - mle.gamma) < 1e-6);
      CHECK(mode.method == Method::mode);
      CHECK(mode.prior == Prior::uniform);
    }
  }

  SECTION("MDI mode matches a grid search on the log posterior") {
    const ExceedanceSample s = gpd_sample(1.0, 0.3, 200, 31);
    const FitResult mode = posterior_mode(s, Prior::mdi);
    const auto grid = oracle::grid_argmax(
        [&](double sigma, double gamma) { return mdi_log_posterior_oracle(s, sigma, gamma); },
        -3.0, 3.0, -0.9, 2.0);
    CHECK(std::abs(std::log(mode.sigma) - grid.log_sigma) < 1e-3);
    CHECK(std::abs(mode.gamma - grid.gamma) < 1e-3);
  }

  SECTION("single point") {
    CHECK_THROWS_AS(posterior_mode(ExceedanceSample::from_excesses({0.5}), Prior::mdi), Error);
  }
}

TEST_CASE("metropolis acceptance rule", "[bayes][mcmc]") {
  // Equal densities: ln U < 0 = difference, always accepted.
  for (double u : {1e-12, 0.3, 0.999999}) CHECK(metropolis_accepts(-4.2, -4.2, u));
  CHECK_FALSE(metropolis_accepts(-4.2, kNegInf, 1e-300));
  CHECK(metropolis_accepts(-4.2, -4.2 + std::log(0.5), 0.49));
  CHECK_FALSE(metropolis_accepts(-4.2, -4.2 + std::log(0.5), 0.51));
}

TEST_CASE("metropolis chain", "[bayes][mcmc]") {
  const ExceedanceSample s = gpd_sample(1.0, 0.3, 1000, 404);

  SECTION("single stored draw") {
    McmcConfig cfg = config(1, 1);
    cfg.burn_in = 0;
    CHECK(metropolis(s, Prior::mdi, cfg).draws.size() == 1);
  }

  SECTION("posterior mean near the generating values and the grid oracle") {
    const PosteriorDraws d = metropolis(s, Prior::mdi, config(10000, 17));
    const auto [ms, mg] = posterior_mean(d);
    CHECK(std::abs(ms - 1.0) < 0.1);
    CHECK(std::abs(mg - 0.3) < 0.1);
    const auto grid = oracle::grid_moments(
        [&](double sigma, double gamma) { return mdi_log_posterior_oracle(s, sigma, gamma); },
        0.6, 1.6, -0.1, 0.8);
    CHECK(std::abs(ms - grid.mean_sigma) < 0.05);
    CHECK(std::abs(mg - grid.mean_gamma) < 0.05);
    CHECK_FALSE(d.acceptance_warning());
  }

  SECTION("the mode dominates every stored draw") {
    const PosteriorDraws d = metropolis(s, Prior::mdi, config(3000, 8));
    const double top = log_posterior(s, Prior::mdi, d.start.sigma, d.start.gamma);
    for (const Draw& draw : d.draws) REQUIRE(log_posterior(s, Prior::mdi, draw.sigma, draw.gamma) <= top);
  }

  SECTION("identical seeds give identical chains") {
    const PosteriorDraws a = metropolis(s, Prior::jeffreys, config(2000, 99));
    const PosteriorDraws b = metropolis(s, Prior::jeffreys, config(2000, 99));
    const PosteriorDraws c = metropolis(s, Prior::jeffreys, config(2000, 100));
    CHECK(a == b);
    CHECK_FALSE(a == c);
  }

  SECTION("thinning keeps every k-th state") {
    McmcConfig cfg = config(500, 5);
    cfg.thinning = 3;
    const PosteriorDraws d = metropolis(s, Prior::mdi, cfg);
    CHECK(d.draws.size() == 500);
    CHECK(d.thinning == 3);
  }

  SECTION("an untuned proposal raises the diagnostics flag") {
    McmcConfig cfg = config(2000, 5);
    cfg.adapt = false;
    cfg.proposal_scale_sigma = 5.0;
    cfg.proposal_scale_gamma = 5.0;
    const PosteriorDraws d = metropolis(s, Prior::mdi, cfg);
    CHECK(d.acceptance_rate < 0.05);
    CHECK(d.acceptance_warning());
  }

  SECTION("invalid configurations") {
    McmcConfig cfg = config(0, 1);
    CHECK_THROWS_AS(metropolis(s, Prior::mdi, cfg), Error);
    cfg = config(10, 1);
    cfg.thinning = 0;
    CHECK_THROWS_AS(metropolis(s, Prior::mdi, cfg), Error);
    cfg = config(10, 1);
    cfg.proposal_correlation = 1.0;
    CHECK_THROWS_AS(metropolis(s, Prior::mdi, cfg), Error);
    CHECK_THROWS_AS(metropolis(ExceedanceSample::from_excesses({1.0}), Prior::mdi, config(10, 1)),
                    Error);
  }
}

TEST_CASE("chain reproduces the grid posterior's marginal moments", "[bayes][mcmc][property]") {
  const ExceedanceSample s = gpd_sample(1.0, 0.3, 2000, 2000);
  McmcConfig cfg = config(40000, 123);
  cfg.proposal_correlation = -0.5;
  const PosteriorDraws d = metropolis(s, Prior::mdi, cfg);
  const auto grid = oracle::grid_moments(
      [&](double sigma, double gamma) { return mdi_log_posterior_oracle(s, sigma, gamma); },
      0.75, 1.3, 0.1, 0.55);

  const auto check_marginal = [](const std::vector<double>& chain, double mean_ref, double var_ref) {
    const double m = mean(chain);
    CHECK(std::abs(m - mean_ref) < 3.0 * oracle::batch_means_se(chain));
    std::vector<double> sq;
    sq.reserve(chain.size());
    for (double x : chain) sq.push_back((x - m) * (x - m));
    CHECK(std::abs(mean(sq) - var_ref) < 3.0 * oracle::batch_means_se(sq));
  };
  check_marginal(d.sigmas(), grid.mean_sigma, grid.var_sigma);
  check_marginal(d.gammas(), grid.mean_gamma, grid.var_gamma);
}

TEST_CASE("posterior mean of stored draws", "[bayes]") {
  PosteriorDraws d;
  d.draws = {{1.0, 0.2}, {3.0, 0.4}};
  auto [s, g] = posterior_mean(d);
  CHECK(s == Approx(2.0));
  CHECK(g == Approx(0.3));
  d.draws = {{2.0, 0.5}};
  std::tie(s, g) = posterior_mean(d);
  CHECK(s == 2.0);
  CHECK(g == 0.5);
  d.draws.clear();
  try {
    posterior_mean(d);
    FAIL("expected empty_chain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_chain);
  }
}
