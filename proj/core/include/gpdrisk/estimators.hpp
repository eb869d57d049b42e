#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gpdrisk {

// Exceedances over a threshold, shifted so the fitted location is zero.
class ExceedanceSample {
 public:
  // Throws insufficient_data if excesses is empty, invalid_argument if any
  // excess is not strictly positive or n_total < excesses.size().
  ExceedanceSample(double threshold, std::vector<double> excesses, std::size_t n_total);

  // Convenience for already zero-shifted data where every point is a tail point.
  static ExceedanceSample from_excesses(std::vector<double> excesses);

  double threshold() const noexcept { return threshold_; }
  std::span<const double> excesses() const noexcept { return excesses_; }
  std::size_t n_total() const noexcept { return n_total_; }
  std::size_t n_exceed() const noexcept { return excesses_.size(); }
  double max_excess() const noexcept { return max_excess_; }

 private:
  double threshold_;
  std::vector<double> excesses_;
  std::size_t n_total_;
  double max_excess_;
};

enum class Method { mom, pwm, mle, mode, mean };
enum class Prior { mdi, jeffreys, uniform };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Prior p) noexcept;
Method parse_method(std::string_view s);
Prior parse_prior(std::string_view s);

struct FitResult {
  double sigma = 0.0;
  double gamma = 0.0;
  Method method = Method::mle;
  std::optional<Prior> prior;
  bool converged = true;
  double objective_value = 0.0;  // log-likelihood / log-posterior, NaN if not applicable
  bool data_consistent = true;   // false when gamma < 0 and max excess >= sigma/|gamma|
};

// Castillo-Hadi check: a negative shape implies an upper bound sigma/|gamma|
// that every observed excess must stay below.
bool is_data_consistent(const ExceedanceSample& s, double sigma, double gamma) noexcept;

// Zero-location GPD log-likelihood; -inf outside the parameter/data support.
double log_likelihood(std::span<const double> excesses, double sigma, double gamma) noexcept;

struct ScaleShape {
  double sigma;
  double gamma;
};

// Probability-weighted-moment solution from a0 = E[X] and a1 = E[X (1 - F(X))]:
// k = a0 / (a0 - 2 a1) - 2, sigma = 2 a0 a1 / (a0 - 2 a1), gamma = -k.
ScaleShape pwm_parameters(double a0, double a1);

FitResult fit_mom(const ExceedanceSample& s);
FitResult fit_pwm(const ExceedanceSample& s);
FitResult fit_mle(const ExceedanceSample& s);

// Exponential sub-model (gamma fixed at 0); its MLE is the sample mean.
double fit_exponential_scale(const ExceedanceSample& s);

namespace detail {

inline constexpr double kGammaLower = -0.99;
inline constexpr double kGammaUpper = 10.0;

// Maximizes a log density over (ln sigma, gamma) with gamma guarded to
// [kGammaLower, kGammaUpper], starting from MOM. Shared by the MLE and the
// posterior mode so both follow one optimizer contract.
FitResult maximize_log_density(const ExceedanceSample& s,
                               const std::function<double(double sigma, double gamma)>& log_density,
                               Method method);

}  // namespace detail

}  // namespace gpdrisk
