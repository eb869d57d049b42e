#include "gpdrisk/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gpdrisk/error.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/optimize.hpp"
#include "gpdrisk/stats.hpp"

namespace gpdrisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_points(const ExceedanceSample& s, std::size_t minimum, std::string_view who) {
  if (s.n_exceed() < minimum) {
    raise(ErrorKind::insufficient_data, std::string(who) + " needs at least " +
                                            std::to_string(minimum) + " exceedances, got " +
                                            std::to_string(s.n_exceed()));
  }
}

FitResult closed_form_result(const ExceedanceSample& s, double sigma, double gamma, Method m) {
  FitResult r;
  r.sigma = sigma;
  r.gamma = gamma;
  r.method = m;
  r.converged = true;
  r.objective_value = log_likelihood(s.excesses(), sigma, gamma);
  r.data_consistent = is_data_consistent(s, sigma, gamma);
  return r;
}

}  // namespace

ExceedanceSample::ExceedanceSample(double threshold, std::vector<double> excesses,
                                   std::size_t n_total)
    : threshold_(threshold), excesses_(std::move(excesses)), n_total_(n_total), max_excess_(0.0) {
  if (excesses_.empty()) raise(ErrorKind::insufficient_data, "exceedance sample is empty");
  if (n_total_ < excesses_.size()) {
    raise(ErrorKind::invalid_argument, "n_total is smaller than the number of exceedances");
  }
  for (double x : excesses_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      raise(ErrorKind::invalid_argument, "every excess must be finite and > 0");
    }
    max_excess_ = std::max(max_excess_, x);
  }
}

ExceedanceSample ExceedanceSample::from_excesses(std::vector<double> excesses) {
  const std::size_t n = excesses.size();
  return ExceedanceSample(0.0, std::move(excesses), n);
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::mom: return "mom";
    case Method::pwm: return "pwm";
    case Method::mle: return "mle";
    case Method::mode: return "mode";
    case Method::mean: return "mean";
  }
  return "unknown";
}

std::string_view to_string(Prior p) noexcept {
  switch (p) {
    case Prior::mdi: return "mdi";
    case Prior::jeffreys: return "jeffreys";
    case Prior::uniform: return "uniform";
  }
  return "unknown";
}

Method parse_method(std::string_view s) {
  for (Method m : {Method::mom, Method::pwm, Method::mle, Method::mode, Method::mean}) {
    if (s == to_string(m)) return m;
  }
  raise(ErrorKind::invalid_argument, "unknown method '" + std::string(s) + "'");
}

Prior parse_prior(std::string_view s) {
  for (Prior p : {Prior::mdi, Prior::jeffreys, Prior::uniform}) {
    if (s == to_string(p)) return p;
  }
  raise(ErrorKind::invalid_argument, "unknown prior '" + std::string(s) + "'");
}

bool is_data_consistent(const ExceedanceSample& s, double sigma, double gamma) noexcept {
  if (!(gamma < 0.0)) return true;
  return s.max_excess() < sigma / -gamma;
}

double log_likelihood(std::span<const double> excesses, double sigma, double gamma) noexcept {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(gamma)) return -kInf;
  const double n = static_cast<double>(excesses.size());
  if (std::abs(gamma) < kSmallGamma) {
    double sum = 0.0;
    for (double x : excesses) sum += x;
    return -n * std::log(sigma) - sum / sigma;
  }
  double sum_log = 0.0;
  const double ratio = gamma / sigma;
  for (double x : excesses) {
    const double arg = ratio * x;
    if (arg <= -1.0) return -kInf;
    sum_log += std::log1p(arg);
  }
  return -n * std::log(sigma) - (1.0 / gamma + 1.0) * sum_log;
}

FitResult fit_mom(const ExceedanceSample& s) {
  require_points(s, 2, "method of moments");
  const double m = mean(s.excesses());
  const double v = sample_variance(s.excesses());
  if (!(v > 0.0)) raise(ErrorKind::insufficient_data, "method of moments: zero sample variance");
  const double r = m * m / v;
  return closed_form_result(s, 0.5 * m * (1.0 + r), 0.5 * (1.0 - r), Method::mom);
}

ScaleShape pwm_parameters(double a0, double a1) {
  const double denom = a0 - 2.0 * a1;
  if (denom == 0.0) raise(ErrorKind::degenerate_moments, "PWM: a0 - 2 a1 vanished");
  const double k = a0 / denom - 2.0;
  const double sigma = 2.0 * a0 * a1 / denom;
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    raise(ErrorKind::degenerate_moments, "PWM produced a non-positive scale");
  }
  return {sigma, -k};
}

FitResult fit_pwm(const ExceedanceSample& s) {
  require_points(s, 2, "probability weighted moments");
  std::vector<double> sorted(s.excesses().begin(), s.excesses().end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double a0 = 0.0;
  double a1 = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double plotting = (static_cast<double>(i + 1) - 0.35) / n;
    a0 += sorted[i];
    a1 += (1.0 - plotting) * sorted[i];
  }
  a0 /= n;
  a1 /= n;
  const ScaleShape p = pwm_parameters(a0, a1);
  return closed_form_result(s, p.sigma, p.gamma, Method::pwm);
}

double fit_exponential_scale(const ExceedanceSample& s) { return mean(s.excesses()); }

FitResult fit_mle(const ExceedanceSample& s) {
  require_points(s, 2, "maximum likelihood");
  const auto xs = s.excesses();
  return detail::maximize_log_density(
      s, [xs](double sigma, double gamma) { return log_likelihood(xs, sigma, gamma); },
      Method::mle);
}

namespace detail {

FitResult maximize_log_density(const ExceedanceSample& s,
                               const std::function<double(double, double)>& log_density,
                               Method method) {
  require_points(s, 2, "likelihood maximization");

  const auto objective = [&](const std::vector<double>& v) {
    const double gamma = v[1];
    if (!(gamma >= kGammaLower && gamma <= kGammaUpper)) return kInf;
    const double value = log_density(std::exp(v[0]), gamma);
    return std::isfinite(value) ? -value : kInf;
  };

  std::vector<double> start{std::log(mean(s.excesses())), 0.1};
  try {
    const FitResult mom = fit_mom(s);
    const std::vector<double> candidate{std::log(mom.sigma),
                                        std::clamp(mom.gamma, kGammaLower, kGammaUpper)};
    if (std::isfinite(objective(candidate))) start = candidate;
  } catch (const Error&) {
    // zero variance: keep the exponential start
  }

  const NelderMeadResult nm = nelder_mead(objective, start, {0.2, 0.1});

  FitResult r;
  r.sigma = std::exp(nm.x[0]);
  r.gamma = nm.x[1];
  r.method = method;
  r.objective_value = -nm.value;
  r.data_consistent = is_data_consistent(s, r.sigma, r.gamma);
  // Pinned at the lower guard means the likelihood kept rising toward gamma < -1.
  const bool pinned = r.gamma < kGammaLower + 1e-6;
  r.converged = nm.converged && !pinned;
  return r;
}

}  // namespace detail

}  // namespace gpdrisk
