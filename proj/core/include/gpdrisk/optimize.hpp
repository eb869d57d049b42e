#pragma once

#include <functional>
#include <vector>

namespace gpdrisk {

struct NelderMeadOptions {
  double diameter_tolerance = 1e-8;  // max vertex distance from the best vertex
  int max_evaluations = 2000;
  // Re-seed a fresh simplex at the optimum once, guarding against collapse.
  bool restart = true;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;  // objective at x
  int evaluations = 0;
  bool converged = false;
};

// Derivative-free minimization. The objective may return +inf to mark
// infeasible points; such vertices are simply never preferred.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start,
                             const std::vector<double>& step,
                             const NelderMeadOptions& options = {});

}  // namespace gpdrisk
