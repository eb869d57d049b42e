#include "gpdrisk/error.hpp"

#include <charconv>

namespace gpdrisk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter_domain: return "parameter_domain";
    case ErrorKind::domain: return "domain";
    case ErrorKind::insufficient_data: return "insufficient_data";
    case ErrorKind::degenerate_moments: return "degenerate_moments";
    case ErrorKind::infinite_mean: return "infinite_mean";
    case ErrorKind::horizon_too_short: return "horizon_too_short";
    case ErrorKind::not_estimable: return "not_estimable";
    case ErrorKind::empty_chain: return "empty_chain";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

std::string to_text(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, end) : std::string("?");
}

}  // namespace gpdrisk
