#pragma once

#include <cstddef>
#include <vector>

#include "gpdrisk/random.hpp"

namespace gpdrisk {

// Below this |gamma| every formula switches to its exponential limit.
inline constexpr double kSmallGamma = 1e-8;

// Generalized Pareto parameters: location (threshold) mu, scale sigma,
// shape / extreme value index gamma.
struct GpdParams {
  double mu = 0.0;
  double sigma = 1.0;
  double gamma = 0.0;

  // Throws ErrorKind::parameter_domain unless sigma > 0 and all are finite.
  void validate() const;

  // Upper end of the support: +inf for gamma >= 0, mu - sigma/gamma otherwise.
  double upper_endpoint() const noexcept;

  // True for mu <= x < upper_endpoint().
  bool in_support(double x) const noexcept;
};

double pdf(const GpdParams& p, double x);
double log_pdf(const GpdParams& p, double x);
double cdf(const GpdParams& p, double x);
double survival(const GpdParams& p, double x);

// Inverse CDF; prob must lie in (0, 1).
double quantile(const GpdParams& p, double prob);

// The inverse-transform map with u read as a survival probability:
// x = mu + sigma (u^-gamma - 1) / gamma. u must lie in (0, 1).
double quantile_from_survival(const GpdParams& p, double u);

std::vector<double> sample(const GpdParams& p, std::size_t n, Rng& rng);

}  // namespace gpdrisk
