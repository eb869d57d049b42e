#include "gpdrisk/risk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpdrisk/error.hpp"
#include "gpdrisk/stats.hpp"

namespace gpdrisk {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    raise(ErrorKind::domain, "alpha must lie in (0,1), got " + to_text(alpha));
  }
}

// Survival of the posterior predictive mixture at x (location = threshold).
double mixture_survival(const PosteriorDraws& d, double threshold, double x) {
  double sum = 0.0;
  for (const Draw& draw : d.draws) sum += survival({threshold, draw.sigma, draw.gamma}, x);
  return sum / static_cast<double>(d.draws.size());
}

// Solves mixture_survival(x) = alpha by bisection on [threshold, bracket].
double mixture_quantile(const PosteriorDraws& d, double threshold, double alpha) {
  double lo = threshold;
  double hi = threshold;
  for (const Draw& draw : d.draws) {
    hi = std::max(hi, var_closed_form({threshold, draw.sigma, draw.gamma}, alpha));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mixture_survival(d, threshold, mid) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// E[X | X > x] under the mixture, over draws with gamma < 1.
double mixture_tail_mean(const PosteriorDraws& d, double threshold, double x) {
  double mass = 0.0;
  double weighted = 0.0;
  for (const Draw& draw : d.draws) {
    if (draw.gamma >= 1.0) continue;
    const GpdParams p{threshold, draw.sigma, draw.gamma};
    const double s = survival(p, x);
    if (s <= 0.0) continue;
    // GPD excesses over x are GPD with scale sigma + gamma (x - mu).
    const double tail_mean = x + (draw.sigma + draw.gamma * (x - threshold)) / (1.0 - draw.gamma);
    mass += s;
    weighted += s * tail_mean;
  }
  return mass > 0.0 ? weighted / mass : x;
}

RiskPoint modeled_point(const PosteriorDraws& d, const ExceedanceSample& s, double horizon,
                        double level, PointEstimate point) {
  RiskPoint rp;
  rp.horizon = horizon;
  rp.alpha_day = 1.0 / horizon;
  rp.alpha_tail = rescale_alpha(rp.alpha_day, s);
  rp.modeled = true;

  std::vector<double> vars;
  std::vector<double> ess;
  vars.reserve(d.draws.size());
  ess.reserve(d.draws.size());
  for (const Draw& draw : d.draws) {
    const GpdParams p{s.threshold(), draw.sigma, draw.gamma};
    vars.push_back(var_closed_form(p, rp.alpha_tail));
    if (draw.gamma < 1.0) ess.push_back(es_closed_form(p, rp.alpha_tail));
  }

  std::tie(rp.var_lo, rp.var_hi) = credible_interval(vars, level);
  if (point == PointEstimate::mean_of_draws) {
    rp.var_mean = mean(vars);
  } else {
    rp.var_mean = mixture_quantile(d, s.threshold(), rp.alpha_tail);
  }

  if (!ess.empty()) {
    const auto [lo, hi] = credible_interval(ess, level);
    rp.es_lo = lo;
    rp.es_hi = hi;
    rp.es_mean = point == PointEstimate::mean_of_draws
                     ? mean(ess)
                     : mixture_tail_mean(d, s.threshold(), rp.var_mean);
  }
  return rp;
}

std::size_t count_infinite_mean(const PosteriorDraws& d) {
  return static_cast<std::size_t>(std::count_if(
      d.draws.begin(), d.draws.end(), [](const Draw& draw) { return draw.gamma >= 1.0; }));
}

}  // namespace

RiskQuery RiskQuery::from_horizons(std::vector<double> horizons, double level) {
  RiskQuery q{std::move(horizons), level};
  q.validate();
  return q;
}

RiskQuery RiskQuery::from_daily_alphas(std::span<const double> alphas, double level) {
  std::vector<double> horizons;
  for (double a : alphas) {
    require_alpha(a);
    horizons.push_back(1.0 / a);
  }
  return from_horizons(std::move(horizons), level);
}

void RiskQuery::validate() const {
  if (horizons.empty()) raise(ErrorKind::invalid_argument, "risk query has no horizons");
  for (double h : horizons) {
    if (!(h > 1.0) || !std::isfinite(h)) {
      raise(ErrorKind::domain, "horizons must be finite and > 1 day, got " + to_text(h));
    }
  }
  if (!(level > 0.0 && level < 1.0)) raise(ErrorKind::domain, "credible level must lie in (0,1)");
}

double var_closed_form(const GpdParams& p, double alpha) {
  require_alpha(alpha);
  return quantile_from_survival(p, alpha);
}

double es_closed_form(const GpdParams& p, double alpha) {
  require_alpha(alpha);
  p.validate();
  if (!(p.gamma < 1.0)) {
    raise(ErrorKind::infinite_mean, "expected shortfall is infinite for gamma >= 1");
  }
  const double tail_factor =
      std::abs(p.gamma) < kSmallGamma ? 1.0 : std::exp(-p.gamma * std::log(alpha));
  return var_closed_form(p, alpha) + p.sigma * tail_factor / (1.0 - p.gamma);
}

double rescale_alpha(double alpha_day, const ExceedanceSample& s) {
  if (!(alpha_day > 0.0)) raise(ErrorKind::domain, "daily alpha must be > 0");
  const double alpha =
      alpha_day * static_cast<double>(s.n_total()) / static_cast<double>(s.n_exceed());
  if (alpha >= 1.0) {
    raise(ErrorKind::horizon_too_short,
          "rescaled alpha " + to_text(alpha) +
              " >= 1: the requested quantile lies below the threshold, use the historical method");
  }
  return alpha;
}

RiskCurve bayes_risk_curve(const PosteriorDraws& d, const ExceedanceSample& s, const RiskQuery& q,
                           PointEstimate point) {
  if (d.draws.empty()) raise(ErrorKind::empty_chain, "risk curve from an empty chain");
  q.validate();
  RiskCurve curve;
  curve.level = q.level;
  curve.es_excluded_draws = count_infinite_mean(d);
  for (double h : q.horizons) curve.points.push_back(modeled_point(d, s, h, q.level, point));
  return curve;
}

RiskCurve risk_curve_with_baselines(const PosteriorDraws& d, const ExceedanceSample& s,
                                    std::span<const double> losses, const RiskQuery& q,
                                    PointEstimate point) {
  if (d.draws.empty()) raise(ErrorKind::empty_chain, "risk curve from an empty chain");
  q.validate();
  RiskCurve curve;
  curve.level = q.level;
  curve.es_excluded_draws = count_infinite_mean(d);
  for (double h : q.horizons) {
    RiskPoint rp;
    try {
      rp = modeled_point(d, s, h, q.level, point);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::horizon_too_short) throw;
      rp.horizon = h;
      rp.alpha_day = 1.0 / h;
    }
    try {
      rp.var_hist = historical_var(losses, rp.alpha_day);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_estimable) throw;
    }
    rp.var_normal = normal_var(losses, rp.alpha_day);
    curve.points.push_back(rp);
  }
  return curve;
}

double historical_var(std::span<const double> losses, double alpha_day) {
  if (losses.empty()) raise(ErrorKind::insufficient_data, "historical VaR of an empty series");
  require_alpha(alpha_day);
  // A single loss is its own quantile at every level.
  if (losses.size() > 1 && alpha_day < 1.0 / static_cast<double>(losses.size())) {
    raise(ErrorKind::not_estimable, "daily alpha below 1/n: beyond the historical data limit");
  }
  std::vector<double> sorted(losses.begin(), losses.end());
  std::sort(sorted.begin(), sorted.end());
  return empirical_quantile_sorted(sorted, 1.0 - alpha_day);
}

double normal_var(std::span<const double> losses, double alpha_day) {
  require_alpha(alpha_day);
  if (losses.size() < 2) raise(ErrorKind::insufficient_data, "Normal VaR needs at least 2 losses");
  const double sd = std::sqrt(sample_variance(losses));
  if (!(sd > 0.0)) raise(ErrorKind::insufficient_data, "Normal VaR: zero standard deviation");
  return mean(losses) + sd * normal_quantile(1.0 - alpha_day);
}

std::vector<double> predictive_sample(const PosteriorDraws& d, double threshold,
                                      std::size_t n_per_draw, Rng& rng) {
  if (d.draws.empty()) raise(ErrorKind::empty_chain, "predictive sample from an empty chain");
  std::vector<double> out;
  out.reserve(d.draws.size() * n_per_draw);
  for (const Draw& draw : d.draws) {
    const auto xs = sample({threshold, draw.sigma, draw.gamma}, n_per_draw, rng);
    out.insert(out.end(), xs.begin(), xs.end());
  }
  return out;
}

}  // namespace gpdrisk
