#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpdrisk {

// Classification carried by every error the library raises. The CLI reports
// the kind verbatim so callers can branch on it.
enum class ErrorKind {
  parameter_domain,     // sigma <= 0 or non-finite parameters
  domain,               // probability or level outside its open interval
  insufficient_data,    // too few points for the requested estimator
  degenerate_moments,   // PWM denominator vanished
  infinite_mean,        // ES requested with gamma >= 1
  horizon_too_short,    // rescaled alpha >= 1, quantile below the threshold
  not_estimable,        // historical quantile beyond the data limit
  empty_chain,
  parse,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

// Shortest round-trip decimal form, for messages.
std::string to_text(double x);

}  // namespace gpdrisk
