#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gpdrisk/bayes.hpp"
#include "gpdrisk/estimators.hpp"
#include "gpdrisk/gpd.hpp"

namespace gpdrisk {

// Horizons are "once every h trading days"; the daily tail probability is 1/h.
struct RiskQuery {
  std::vector<double> horizons;
  double level = 0.95;

  static RiskQuery from_horizons(std::vector<double> horizons, double level = 0.95);
  static RiskQuery from_daily_alphas(std::span<const double> alphas, double level = 0.95);

  void validate() const;
};

// How the point curve summarizes per-draw risk measures.
enum class PointEstimate {
  mean_of_draws,       // posterior mean of the per-draw closed-form VaR/ES
  predictive_quantile, // quantile (and tail mean) of the posterior predictive mixture
};

struct RiskPoint {
  double horizon = 0.0;
  double alpha_day = 0.0;
  // Modeled (GPD) columns are present only when the rescaled alpha is in (0,1).
  bool modeled = false;
  double alpha_tail = 0.0;
  double var_mean = 0.0, var_lo = 0.0, var_hi = 0.0;
  std::optional<double> es_mean, es_lo, es_hi;  // absent if every draw has gamma >= 1
  std::optional<double> var_hist;    // absent beyond the data limit
  std::optional<double> var_normal;
};

struct RiskCurve {
  double level = 0.95;
  std::size_t es_excluded_draws = 0;  // draws with gamma >= 1, omitted from ES
  std::vector<RiskPoint> points;
};

// Closed-form tail quantile exceeded with probability alpha.
double var_closed_form(const GpdParams& p, double alpha);
// Conditional tail expectation beyond var_closed_form; gamma < 1 required.
double es_closed_form(const GpdParams& p, double alpha);

// alpha_day * n_total / n_exceed; horizon_too_short if the result is >= 1.
double rescale_alpha(double alpha_day, const ExceedanceSample& s);

// Posterior bands for every horizon. Throws horizon_too_short if any horizon
// falls below the modeled tail.
RiskCurve bayes_risk_curve(const PosteriorDraws& d, const ExceedanceSample& s, const RiskQuery& q,
                           PointEstimate point = PointEstimate::mean_of_draws);

// As bayes_risk_curve, but horizons below the modeled tail are kept as
// unmodeled rows, and historical/Normal baselines from `losses` are attached.
RiskCurve risk_curve_with_baselines(const PosteriorDraws& d, const ExceedanceSample& s,
                                    std::span<const double> losses, const RiskQuery& q,
                                    PointEstimate point = PointEstimate::mean_of_draws);

double historical_var(std::span<const double> losses, double alpha_day);
double normal_var(std::span<const double> losses, double alpha_day);

// Posterior predictive draws: n_per_draw GPD samples per posterior draw.
std::vector<double> predictive_sample(const PosteriorDraws& d, double threshold,
                                      std::size_t n_per_draw, Rng& rng);

}  // namespace gpdrisk
