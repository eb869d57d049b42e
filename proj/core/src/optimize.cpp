#include "gpdrisk/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gpdrisk/error.hpp"

namespace gpdrisk {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

class Simplex {
 public:
  Simplex(const std::function<double(const std::vector<double>&)>& objective, int& evals)
      : objective_(objective), evals_(evals) {}

  double eval(const std::vector<double>& x) {
    ++evals_;
    const double f = objective_(x);
    return std::isnan(f) ? HUGE_VAL : f;
  }

  void init(std::vector<double> start, const std::vector<double>& step) {
    vertices_.clear();
    vertices_.push_back({start, eval(start)});
    for (std::size_t i = 0; i < start.size(); ++i) {
      std::vector<double> x = start;
      x[i] += step[i];
      double f = eval(x);
      if (!std::isfinite(f)) {
        // Try the opposite direction before accepting an infeasible vertex.
        x[i] = start[i] - step[i];
        f = eval(x);
      }
      vertices_.push_back({std::move(x), f});
    }
    order();
  }

  void order() {
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  }

  double diameter() const {
    double d = 0.0;
    const auto& best = vertices_.front().x;
    for (std::size_t v = 1; v < vertices_.size(); ++v) {
      double s = 0.0;
      for (std::size_t i = 0; i < best.size(); ++i) {
        const double diff = vertices_[v].x[i] - best[i];
        s += diff * diff;
      }
      d = std::max(d, std::sqrt(s));
    }
    return d;
  }

  std::vector<double> along(const std::vector<double>& centroid, double coeff) const {
    const auto& worst = vertices_.back().x;
    std::vector<double> x(centroid.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = centroid[i] + coeff * (centroid[i] - worst[i]);
    return x;
  }

  void step() {
    const std::size_t n = vertices_.front().x.size();
    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v + 1 < vertices_.size(); ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += vertices_[v].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const double f_best = vertices_.front().f;
    const double f_second_worst = vertices_[vertices_.size() - 2].f;
    Vertex& worst = vertices_.back();

    auto reflected = along(centroid, kReflect);
    const double f_reflected = eval(reflected);

    if (f_reflected < f_best) {
      auto expanded = along(centroid, kReflect * kExpand);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        worst = {std::move(expanded), f_expanded};
      } else {
        worst = {std::move(reflected), f_reflected};
      }
    } else if (f_reflected < f_second_worst) {
      worst = {std::move(reflected), f_reflected};
    } else {
      const bool outside = f_reflected < worst.f;
      auto contracted = along(centroid, outside ? kReflect * kContract : -kContract);
      const double f_contracted = eval(contracted);
      if (f_contracted < std::min(f_reflected, worst.f)) {
        worst = {std::move(contracted), f_contracted};
      } else {
        const auto best = vertices_.front().x;
        for (std::size_t v = 1; v < vertices_.size(); ++v) {
          for (std::size_t i = 0; i < n; ++i) {
            vertices_[v].x[i] = best[i] + kShrink * (vertices_[v].x[i] - best[i]);
          }
          vertices_[v].f = eval(vertices_[v].x);
        }
      }
    }
    order();
  }

  const Vertex& best() const { return vertices_.front(); }

 private:
  const std::function<double(const std::vector<double>&)>& objective_;
  int& evals_;
  std::vector<Vertex> vertices_;
};

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start,
                             const std::vector<double>& step,
                             const NelderMeadOptions& options) {
  if (start.empty() || step.size() != start.size()) {
    raise(ErrorKind::invalid_argument, "nelder_mead: start and step must be non-empty and equal length");
  }
  int evals = 0;
  Simplex simplex(objective, evals);
  simplex.init(start, step);

  bool converged = false;
  const int passes = options.restart ? 2 : 1;
  for (int pass = 0; pass < passes; ++pass) {
    converged = false;
    while (evals < options.max_evaluations) {
      if (simplex.diameter() < options.diameter_tolerance) {
        converged = true;
        break;
      }
      simplex.step();
    }
    if (!converged || pass + 1 == passes) break;
    std::vector<double> restart_step(step.size());
    for (std::size_t i = 0; i < step.size(); ++i) restart_step[i] = 0.1 * step[i];
    simplex.init(simplex.best().x, restart_step);
  }
  if (!converged && simplex.diameter() < options.diameter_tolerance) converged = true;

  return {simplex.best().x, simplex.best().f, evals, converged && std::isfinite(simplex.best().f)};
}

}  // namespace gpdrisk
