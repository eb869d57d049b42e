#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace gpdrisk {

using Date = std::chrono::sys_days;

// Parses YYYY-MM-DD; throws ErrorKind::parse on malformed or impossible dates.
Date parse_date(std::string_view text);
std::string format_date(Date d);

struct PricePoint {
  Date date;
  double close;
};

// Daily closing prices, dates strictly increasing, closes > 0.
struct PriceSeries {
  std::vector<PricePoint> points;

  void validate() const;
};

// Daily losses (negated log returns). `dates` is either empty or parallel
// to `losses`.
struct LossSeries {
  std::vector<Date> dates;
  std::vector<double> losses;
};

// loss_t = -ln(close_t / close_{t-1}), dated at t.
LossSeries log_losses(const PriceSeries& prices);

// CSV with header containing `date` and `close` columns.
PriceSeries read_price_csv(std::istream& in);

// CSV with a `loss` (or `x`) column and an optional `date` column.
LossSeries read_loss_csv(std::istream& in);

// Synthetic index-like data: a Normal body conditioned to stay at or below
// the threshold plus exactly `n_exceed` days whose loss is the threshold plus
// a GPD(0, tail_sigma, tail_gamma) excess, at uniformly random positions.
struct SyntheticMarket {
  std::size_t n_days = 2500;
  std::size_t n_exceed = 100;
  double threshold = 0.033;
  double body_mean = 0.0003;
  double body_sd = 0.011;
  double tail_sigma = 0.008;
  double tail_gamma = 0.3;
  double start_price = 10000.0;
  std::string start_date = "2002-08-01";
  std::uint64_t seed = 1;

  void validate() const;
};

std::vector<double> synthetic_losses(const SyntheticMarket& m);

// Weekday-dated prices whose log losses reproduce synthetic_losses(m).
PriceSeries synthetic_prices(const SyntheticMarket& m);

}  // namespace gpdrisk
