#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "gpdrisk/optimize.hpp"

using namespace gpdrisk;
using Catch::Approx;

TEST_CASE("nelder-mead finds a quadratic minimum", "[optimize]") {
  const auto f = [](const std::vector<double>& v) {
    return (v[0] - 1.5) * (v[0] - 1.5) + 3.0 * (v[1] + 0.25) * (v[1] + 0.25);
  };
  const auto r = nelder_mead(f, {0.0, 0.0}, {0.5, 0.5});
  CHECK(r.converged);
  CHECK(r.x[0] == Approx(1.5).margin(1e-7));
  CHECK(r.x[1] == Approx(-0.25).margin(1e-7));
  CHECK(r.evaluations <= 2000);
}

TEST_CASE("nelder-mead on Rosenbrock", "[optimize]") {
  const auto f = [](const std::vector<double>& v) {
    return 100.0 * std::pow(v[1] - v[0] * v[0], 2) + std::pow(1.0 - v[0], 2);
  };
  NelderMeadOptions opts;
  opts.max_evaluations = 5000;
  const auto r = nelder_mead(f, {-1.2, 1.0}, {0.1, 0.1}, opts);
  CHECK(r.x[0] == Approx(1.0).margin(1e-5));
  CHECK(r.x[1] == Approx(1.0).margin(1e-5));
}

TEST_CASE("infeasible region marked by +inf is avoided", "[optimize]") {
  // Minimum of the unconstrained quadratic lies at x = -1, outside x > 0.
  const auto f = [](const std::vector<double>& v) {
    if (v[0] <= 0.0) return std::numeric_limits<double>::infinity();
    return (v[0] + 1.0) * (v[0] + 1.0) + v[1] * v[1];
  };
  const auto r = nelder_mead(f, {2.0, 1.0}, {0.5, 0.5});
  CHECK(r.x[0] > 0.0);
  CHECK(r.x[0] < 1e-6);
  CHECK(std::isfinite(r.value));
}

TEST_CASE("evaluation budget stops the search", "[optimize]") {
  NelderMeadOptions opts;
  opts.max_evaluations = 20;
  const auto f = [](const std::vector<double>& v) { return v[0] * v[0] + v[1] * v[1]; };
  const auto r = nelder_mead(f, {10.0, 10.0}, {0.01, 0.01}, opts);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 22);
}
