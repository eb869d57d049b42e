#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "gpdrisk/error.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/stats.hpp"
#include "oracles.hpp"

using namespace gpdrisk;
using Catch::Approx;

TEST_CASE("pdf matches direct substitution", "[gpd]") {
  CHECK(pdf({0, 1, 0}, 0.0) == Approx(1.0));
  CHECK(pdf({0, 1, 1}, 1.0) == Approx(0.25));
  // beyond the upper endpoint sigma/|gamma| = 2
  CHECK(pdf({0, 1, -0.5}, 3.0) == 0.0);
  CHECK(pdf({0, 1, 0.3}, -0.1) == 0.0);
}

TEST_CASE("pdf at the bounded-tail endpoint is zero", "[gpd]") {
  CHECK(pdf({0, 1, -0.5}, 2.0) == 0.0);
  CHECK(log_pdf({0, 1, -0.5}, 2.0) == -std::numeric_limits<double>::infinity());
  CHECK(pdf({0, 1, -0.5}, 1.999) > 0.0);
}

TEST_CASE("log_pdf examples", "[gpd]") {
  CHECK(log_pdf({0, 1, 1}, 1.0) == Approx(-2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(log_pdf({0, 2, 0}, 2.0) == Approx(-std::log(2.0) - 1.0).epsilon(1e-14));
  CHECK(log_pdf({0, 1, -0.5}, 3.0) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("cdf examples", "[gpd]") {
  CHECK(cdf({0, 1, 1}, 1.0) == Approx(0.5));
  CHECK(cdf({0, 1, 0}, std::log(2.0)) == Approx(0.5).epsilon(1e-14));
  CHECK(cdf({5, 1, 0.3}, 5.0) == 0.0);
  CHECK(cdf({0, 1, -0.5}, 2.5) == 1.0);
}

TEST_CASE("quantile examples", "[gpd]") {
  CHECK(quantile({0, 1, 1}, 0.5) == Approx(1.0).epsilon(1e-14));
  // Derived: (0.25^-0.3 - 1) * 2 / 0.3, confirmed by plugging back into the survival function.
  const double q = quantile({0, 2, 0.3}, 0.75);
  CHECK(q == Approx((std::pow(0.25, -0.3) - 1.0) * 2.0 / 0.3).epsilon(1e-13));
  CHECK(q == Approx(3.4381104434026533).epsilon(1e-12));
  CHECK(oracle::gpd_survival(2, 0.3, q) == Approx(0.25).epsilon(1e-12));
  CHECK(quantile({10, 1, 0}, 1.0 - std::exp(-1.0)) == Approx(11.0).epsilon(1e-14));
}

TEST_CASE("invalid parameters and probabilities raise classified errors", "[gpd]") {
  const auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::invalid_argument;
  };
  CHECK(kind_of([] { pdf({0, 0, 0.1}, 1.0); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { cdf({0, -1, 0.1}, 1.0); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { quantile({0, 1, 0.1}, 0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { quantile({0, 1, 0.1}, 1.0); }) == ErrorKind::domain);
}

TEST_CASE("density integrates to one", "[gpd][property]") {
  for (double gamma : {-0.4, -0.2, 0.0, 0.3, 0.8}) {
    for (double sigma : {0.008, 1.0, 5.0}) {
      const GpdParams p{0.0, sigma, gamma};
      const double upper = gamma < 0 ? -sigma / gamma : std::numeric_limits<double>::infinity();
      const double total = oracle::integrate([&](double x) { return pdf(p, x); }, 0.0, upper);
      INFO("gamma=" << gamma << " sigma=" << sigma);
      CHECK(std::abs(total - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("quantile and cdf are inverse", "[gpd][property]") {
  for (double gamma : {-0.4, -0.2, 0.0, 1e-9, 0.3, 0.8}) {
    for (double sigma : {0.008, 1.0, 5.0}) {
      const GpdParams p{0.5, sigma, gamma};
      for (double prob : {1e-6, 0.01, 0.25, 0.5, 0.9, 0.999, 0.99999}) {
        CHECK(std::abs(cdf(p, quantile(p, prob)) - prob) < 1e-12);
      }
      for (double z : {1e-3, 0.1, 0.5, 1.0, 1.7}) {
        const double x = p.mu + z * sigma;
        if (!p.in_support(x)) continue;
        const double back = quantile(p, cdf(p, x));
        CHECK(std::abs(back - x) <= 1e-9 * std::abs(x));
      }
    }
  }
}

TEST_CASE("small-gamma switch is continuous", "[gpd][property]") {
  for (double sigma : {0.5, 1.0, 3.0}) {
    for (double x = 0.0; x < 10.0; x += 0.25) {
      const double base = pdf({0, sigma, 0.0}, x);
      CHECK(std::abs(pdf({0, sigma, 1e-9}, x) - base) < 1e-6);
      CHECK(std::abs(pdf({0, sigma, -1e-9}, x) - base) < 1e-6);
      // just outside the switch the general formula takes over
      CHECK(std::abs(pdf({0, sigma, 2e-8}, x) - base) < 1e-6);
    }
  }
}

TEST_CASE("log_pdf equals log of pdf", "[gpd][property]") {
  for (double gamma : {-0.4, 0.0, 0.3, 0.8}) {
    const GpdParams p{0, 1.3, gamma};
    for (double x = 0.0; x < 50.0; x += 0.37) {
      const double d = pdf(p, x);
      if (d > 1e-300) CHECK(std::abs(log_pdf(p, x) - std::log(d)) < 1e-10);
    }
  }
}

TEST_CASE("pdf is scale equivariant", "[gpd][property]") {
  for (double gamma : {-0.3, 0.0, 0.4}) {
    for (double c : {0.008, 2.5, 40.0}) {
      for (double x : {0.0, 0.2, 1.0, 1.9}) {
        CHECK(pdf({0, c * 1.0, gamma}, c * x) * c == Approx(pdf({0, 1.0, gamma}, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("sampler", "[gpd][sampler]") {
  Rng rng(11);
  CHECK(sample({0, 1, 0.3}, 0, rng).empty());

  SECTION("bounded support") {
    const auto xs = sample({0, 1, -0.5}, 10000, rng);
    for (double x : xs) {
      REQUIRE(x >= 0.0);
      REQUIRE(x < 2.0);
    }
  }

  SECTION("KS against the analytic cdf") {
    const GpdParams p{0, 1, 0.3};
    const auto xs = sample(p, 10000, rng);
    const double d = oracle::ks_statistic(xs, [](double x) { return 1.0 - oracle::gpd_survival(1, 0.3, x); });
    CHECK(d < oracle::ks_critical_01(xs.size()));
    CHECK(ks_pvalue(ks_statistic(xs, [&](double x) { return cdf(p, x); }), xs.size()) > 0.01);
  }

  SECTION("mean within three standard errors") {
    const auto xs = sample({0, 1, 0.3}, 100000, rng);
    const double m = mean(xs);
    const double se = std::sqrt(sample_variance(xs) / xs.size());
    CHECK(std::abs(m - 1.0 / 0.7) < 3.0 * se);
  }

  SECTION("deterministic given the seed") {
    Rng a(5);
    Rng b(5);
    CHECK(sample({1, 2, 0.1}, 100, a) == sample({1, 2, 0.1}, 100, b));
  }
}
