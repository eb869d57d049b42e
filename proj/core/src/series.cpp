#include "gpdrisk/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "gpdrisk/error.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/random.hpp"

namespace gpdrisk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    raise(ErrorKind::parse, "line " + std::to_string(line_no) + ": not a number: '" +
                                std::string(text) + "'");
  }
  return value;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;

  std::ptrdiff_t column(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
  }
};

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    for (auto f : split_csv(line)) fields.emplace_back(f);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size()) {
      raise(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(t.header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.line_numbers.push_back(line_no);
  }
  if (t.header.empty()) raise(ErrorKind::parse, "empty CSV input (no header)");
  return t;
}

}  // namespace

Date parse_date(std::string_view text) {
  text = trim(text);
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  const bool shape = text.size() == 10 && text[4] == '-' && text[7] == '-';
  const auto parse_part = [&](std::size_t pos, std::size_t len, auto& out) {
    const auto* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, first + len, out);
    return ec == std::errc() && ptr == first + len;
  };
  if (!shape || !parse_part(0, 4, y) || !parse_part(5, 2, m) || !parse_part(8, 2, d)) {
    raise(ErrorKind::parse, "malformed date '" + std::string(text) + "', expected YYYY-MM-DD");
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                        std::chrono::day{d}};
  if (!ymd.ok()) raise(ErrorKind::parse, "invalid calendar date '" + std::string(text) + "'");
  return Date{ymd};
}

std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

void PriceSeries::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].close > 0.0)) {
      raise(ErrorKind::parse, "non-positive close price on " + format_date(points[i].date));
    }
    if (i > 0 && !(points[i].date > points[i - 1].date)) {
      raise(ErrorKind::parse, "dates must be strictly increasing at " + format_date(points[i].date));
    }
  }
}

LossSeries log_losses(const PriceSeries& prices) {
  prices.validate();
  if (prices.points.size() < 2) raise(ErrorKind::insufficient_data, "need at least 2 prices");
  LossSeries out;
  for (std::size_t t = 1; t < prices.points.size(); ++t) {
    out.dates.push_back(prices.points[t].date);
    out.losses.push_back(-std::log(prices.points[t].close / prices.points[t - 1].close));
  }
  return out;
}

PriceSeries read_price_csv(std::istream& in) {
  const CsvTable t = read_csv(in);
  const auto date_col = t.column("date");
  const auto close_col = t.column("close");
  if (date_col < 0 || close_col < 0) {
    raise(ErrorKind::parse, "price CSV needs 'date' and 'close' columns");
  }
  PriceSeries s;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    s.points.push_back({parse_date(t.rows[r][static_cast<std::size_t>(date_col)]),
                        parse_number(t.rows[r][static_cast<std::size_t>(close_col)],
                                     t.line_numbers[r])});
  }
  s.validate();
  return s;
}

LossSeries read_loss_csv(std::istream& in) {
  const CsvTable t = read_csv(in);
  auto loss_col = t.column("loss");
  if (loss_col < 0) loss_col = t.column("x");
  if (loss_col < 0) raise(ErrorKind::parse, "loss CSV needs a 'loss' (or 'x') column");
  const auto date_col = t.column("date");
  LossSeries s;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    s.losses.push_back(
        parse_number(t.rows[r][static_cast<std::size_t>(loss_col)], t.line_numbers[r]));
    if (date_col >= 0) s.dates.push_back(parse_date(t.rows[r][static_cast<std::size_t>(date_col)]));
  }
  if (s.losses.empty()) raise(ErrorKind::parse, "loss CSV has no data rows");
  return s;
}

void SyntheticMarket::validate() const {
  if (n_days < 2 || n_exceed > n_days) {
    raise(ErrorKind::invalid_argument, "synthetic market needs n_days >= 2 and n_exceed <= n_days");
  }
  if (!(body_sd > 0.0) || !(tail_sigma > 0.0) || !(start_price > 0.0)) {
    raise(ErrorKind::invalid_argument, "synthetic market scales and start price must be > 0");
  }
  if (!(body_mean < threshold)) {
    raise(ErrorKind::invalid_argument, "synthetic market body mean must lie below the threshold");
  }
  parse_date(start_date);
}

std::vector<double> synthetic_losses(const SyntheticMarket& m) {
  m.validate();
  Rng rng(m.seed);

  // Partial Fisher-Yates: the first n_exceed slots become tail days.
  std::vector<std::size_t> order(m.n_days);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < m.n_exceed; ++i) {
    const auto span = static_cast<double>(m.n_days - i);
    const auto j = i + std::min(static_cast<std::size_t>(uniform_open(rng) * span), m.n_days - i - 1);
    std::swap(order[i], order[j]);
  }
  std::vector<bool> is_tail(m.n_days, false);
  for (std::size_t i = 0; i < m.n_exceed; ++i) is_tail[order[i]] = true;

  const GpdParams tail{m.threshold, m.tail_sigma, m.tail_gamma};
  std::normal_distribution<double> body(m.body_mean, m.body_sd);
  std::vector<double> losses(m.n_days);
  for (std::size_t t = 0; t < m.n_days; ++t) {
    if (is_tail[t]) {
      losses[t] = quantile_from_survival(tail, uniform_open(rng));
    } else {
      double x = body(rng);
      while (x > m.threshold) x = body(rng);
      losses[t] = x;
    }
  }
  return losses;
}

PriceSeries synthetic_prices(const SyntheticMarket& m) {
  const std::vector<double> losses = synthetic_losses(m);
  PriceSeries s;
  Date date = parse_date(m.start_date);
  const auto next_weekday = [](Date d) {
    do {
      d += std::chrono::days{1};
    } while (std::chrono::weekday{d} == std::chrono::Saturday ||
             std::chrono::weekday{d} == std::chrono::Sunday);
    return d;
  };
  if (std::chrono::weekday{date} == std::chrono::Saturday ||
      std::chrono::weekday{date} == std::chrono::Sunday) {
    date = next_weekday(date);
  }
  double close = m.start_price;
  s.points.push_back({date, close});
  for (double loss : losses) {
    date = next_weekday(date);
    close *= std::exp(-loss);
    s.points.push_back({date, close});
  }
  return s;
}

}  // namespace gpdrisk
