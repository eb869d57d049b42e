#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gpdrisk/series.hpp"

namespace gpdrisk::cli {

// Shortest decimal form that parses back to the identical double.
std::string num(double x);

// "-" reads standard input.
PriceSeries load_prices(const std::string& path);
LossSeries load_losses(const std::string& path);

// Writes `content` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace gpdrisk::cli
