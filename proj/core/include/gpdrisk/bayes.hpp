#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gpdrisk/estimators.hpp"

namespace gpdrisk {

// Log prior density up to an additive constant; -inf outside its domain.
//   mdi:      gamma - ln sigma
//   jeffreys: -ln sigma - ln(1 + gamma) - 0.5 ln(1 + 2 gamma), gamma > -0.5
//   uniform:  0
double log_prior(Prior prior, double sigma, double gamma) noexcept;

// Log-likelihood plus log prior with the normalizing constant set to zero.
// Every invalid point maps to -inf; this never throws.
double log_posterior(const ExceedanceSample& s, Prior prior, double sigma, double gamma) noexcept;

FitResult posterior_mode(const ExceedanceSample& s, Prior prior);

struct McmcConfig {
  std::size_t n_draws = 10000;
  std::size_t burn_in = 2000;
  std::size_t thinning = 1;
  // Unset scales default to 0.15 |mode| (gamma floored at 0.01).
  std::optional<double> proposal_scale_sigma;
  std::optional<double> proposal_scale_gamma;
  double proposal_correlation = 0.0;
  std::uint64_t seed = 1;
  // Scale the proposal by 1.1 / 0.9 every 100 burn-in proposals to keep the
  // acceptance rate inside [0.2, 0.5]. Frozen after burn-in.
  bool adapt = true;

  void validate() const;
};

struct Draw {
  double sigma;
  double gamma;
  friend bool operator==(const Draw&, const Draw&) = default;
};

struct PosteriorDraws {
  std::vector<Draw> draws;
  double acceptance_rate = 0.0;  // post-burn-in proposals only
  std::size_t burn_in = 0;
  std::size_t thinning = 1;
  std::uint64_t seed = 0;
  double final_scale_sigma = 0.0;
  double final_scale_gamma = 0.0;
  FitResult start;  // the posterior mode the chain started from

  // Acceptance outside [0.05, 0.80] suggests a poorly tuned proposal.
  bool acceptance_warning() const noexcept {
    return acceptance_rate < 0.05 || acceptance_rate > 0.80;
  }

  std::vector<double> sigmas() const;
  std::vector<double> gammas() const;

  friend bool operator==(const PosteriorDraws& a, const PosteriorDraws& b) {
    return a.draws == b.draws && a.acceptance_rate == b.acceptance_rate &&
           a.burn_in == b.burn_in && a.thinning == b.thinning && a.seed == b.seed;
  }
};

// Random-walk Metropolis on (sigma, gamma) with a bivariate Normal proposal,
// started at the posterior mode. A move is accepted when
// ln p(new) - ln p(current) > ln U.
PosteriorDraws metropolis(const ExceedanceSample& s, Prior prior, const McmcConfig& cfg);

// Single acceptance decision, exposed for testing the rule itself.
bool metropolis_accepts(double log_post_current, double log_post_proposed, double uniform) noexcept;

std::pair<double, double> posterior_mean(const PosteriorDraws& d);

// Posterior-mean point estimate packaged as a FitResult (method = mean).
FitResult posterior_mean_fit(const ExceedanceSample& s, Prior prior, const PosteriorDraws& d);

}  // namespace gpdrisk
