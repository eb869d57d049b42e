#include "gpdrisk/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gpdrisk/error.hpp"
#include "gpdrisk/random.hpp"

namespace gpdrisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kAdaptWindow = 100;

}  // namespace

double log_prior(Prior prior, double sigma, double gamma) noexcept {
  if (!(sigma > 0.0)) return -kInf;
  switch (prior) {
    case Prior::mdi:
      return gamma - std::log(sigma);
    case Prior::jeffreys:
      if (!(gamma > -0.5)) return -kInf;
      return -std::log(sigma) - std::log1p(gamma) - 0.5 * std::log1p(2.0 * gamma);
    case Prior::uniform:
      return 0.0;
  }
  return -kInf;
}

double log_posterior(const ExceedanceSample& s, Prior prior, double sigma, double gamma) noexcept {
  const double lp = log_prior(prior, sigma, gamma);
  if (lp == -kInf) return -kInf;
  const double ll = log_likelihood(s.excesses(), sigma, gamma);
  if (ll == -kInf) return -kInf;
  return ll + lp;
}

FitResult posterior_mode(const ExceedanceSample& s, Prior prior) {
  FitResult r = detail::maximize_log_density(
      s, [&s, prior](double sigma, double gamma) { return log_posterior(s, prior, sigma, gamma); },
      Method::mode);
  r.prior = prior;
  return r;
}

void McmcConfig::validate() const {
  if (n_draws < 1) raise(ErrorKind::invalid_argument, "McmcConfig: n_draws must be >= 1");
  if (thinning < 1) raise(ErrorKind::invalid_argument, "McmcConfig: thinning must be >= 1");
  if (!(proposal_correlation > -1.0 && proposal_correlation < 1.0)) {
    raise(ErrorKind::invalid_argument, "McmcConfig: proposal correlation must lie in (-1,1)");
  }
  for (const auto& scale : {proposal_scale_sigma, proposal_scale_gamma}) {
    if (scale && !(*scale > 0.0)) {
      raise(ErrorKind::invalid_argument, "McmcConfig: proposal scales must be > 0");
    }
  }
}

std::vector<double> PosteriorDraws::sigmas() const {
  std::vector<double> out;
  out.reserve(draws.size());
  for (const Draw& d : draws) out.push_back(d.sigma);
  return out;
}

std::vector<double> PosteriorDraws::gammas() const {
  std::vector<double> out;
  out.reserve(draws.size());
  for (const Draw& d : draws) out.push_back(d.gamma);
  return out;
}

bool metropolis_accepts(double log_post_current, double log_post_proposed, double uniform) noexcept {
  if (log_post_proposed == -kInf) return false;
  return log_post_proposed - log_post_current > std::log(uniform);
}

PosteriorDraws metropolis(const ExceedanceSample& s, Prior prior, const McmcConfig& cfg) {
  cfg.validate();
  const FitResult mode = posterior_mode(s, prior);

  double scale_sigma = cfg.proposal_scale_sigma.value_or(0.15 * mode.sigma);
  double scale_gamma = cfg.proposal_scale_gamma.value_or(std::max(0.15 * std::abs(mode.gamma), 0.01));
  const double rho = cfg.proposal_correlation;
  const double rho_c = std::sqrt(1.0 - rho * rho);

  Rng rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Draw current{mode.sigma, mode.gamma};
  double lp_current = log_posterior(s, prior, current.sigma, current.gamma);
  if (!std::isfinite(lp_current)) {
    raise(ErrorKind::invalid_argument, "metropolis: posterior mode has non-finite log posterior");
  }

  PosteriorDraws out;
  out.burn_in = cfg.burn_in;
  out.thinning = cfg.thinning;
  out.seed = cfg.seed;
  out.start = mode;
  out.draws.reserve(cfg.n_draws);

  const std::size_t total = cfg.burn_in + cfg.n_draws * cfg.thinning;
  std::size_t window_accepts = 0;
  std::size_t kept_accepts = 0;

  for (std::size_t iter = 0; iter < total; ++iter) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    const Draw proposal{current.sigma + scale_sigma * z1,
                        current.gamma + scale_gamma * (rho * z1 + rho_c * z2)};
    const double lp_proposal = log_posterior(s, prior, proposal.sigma, proposal.gamma);
    const bool accept = metropolis_accepts(lp_current, lp_proposal, uniform_open(rng));
    if (accept) {
      current = proposal;
      lp_current = lp_proposal;
    }

    if (iter < cfg.burn_in) {
      window_accepts += accept ? 1 : 0;
      if (cfg.adapt && (iter + 1) % kAdaptWindow == 0) {
        const double rate = static_cast<double>(window_accepts) / kAdaptWindow;
        const double factor = rate < 0.2 ? 0.9 : (rate > 0.5 ? 1.1 : 1.0);
        scale_sigma *= factor;
        scale_gamma *= factor;
        window_accepts = 0;
      }
      continue;
    }
    kept_accepts += accept ? 1 : 0;
    if ((iter - cfg.burn_in + 1) % cfg.thinning == 0) out.draws.push_back(current);
  }

  out.acceptance_rate =
      static_cast<double>(kept_accepts) / static_cast<double>(cfg.n_draws * cfg.thinning);
  out.final_scale_sigma = scale_sigma;
  out.final_scale_gamma = scale_gamma;
  return out;
}

std::pair<double, double> posterior_mean(const PosteriorDraws& d) {
  if (d.draws.empty()) raise(ErrorKind::empty_chain, "posterior mean of an empty chain");
  double ss = 0.0;
  double sg = 0.0;
  for (const Draw& draw : d.draws) {
    ss += draw.sigma;
    sg += draw.gamma;
  }
  const double n = static_cast<double>(d.draws.size());
  return {ss / n, sg / n};
}

FitResult posterior_mean_fit(const ExceedanceSample& s, Prior prior, const PosteriorDraws& d) {
  const auto [sigma, gamma] = posterior_mean(d);
  FitResult r;
  r.sigma = sigma;
  r.gamma = gamma;
  r.method = Method::mean;
  r.prior = prior;
  r.converged = !d.acceptance_warning();
  r.objective_value = log_posterior(s, prior, sigma, gamma);
  r.data_consistent = is_data_consistent(s, sigma, gamma);
  return r;
}

}  // namespace gpdrisk
