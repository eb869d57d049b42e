#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gpdrisk {

using Rng = std::mt19937_64;

// Uniform variate on the open interval (0, 1).
double uniform_open(Rng& rng);

// Mixes a master seed with a path of indices (scenario, replication, ...)
// into an independent child seed. Pure function of its arguments.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);

}  // namespace gpdrisk
