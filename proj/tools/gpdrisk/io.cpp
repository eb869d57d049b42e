#include "io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <iostream>

#include "gpdrisk/error.hpp"

namespace gpdrisk::cli {

namespace {

template <typename Reader>
auto with_input(const std::string& path, Reader read) {
  if (path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) raise(ErrorKind::invalid_argument, "cannot open '" + path + "'");
  return read(in);
}

}  // namespace

std::string num(double x) { return fmt::format("{}", x); }

PriceSeries load_prices(const std::string& path) {
  return with_input(path, [](std::istream& in) { return read_price_csv(in); });
}

LossSeries load_losses(const std::string& path) {
  return with_input(path, [](std::istream& in) { return read_loss_csv(in); });
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::invalid_argument, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) raise(ErrorKind::invalid_argument, "write failed for '" + path.string() + "'");
}

}  // namespace gpdrisk::cli
