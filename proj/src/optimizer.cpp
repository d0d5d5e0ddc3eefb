#include "steerkit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

constexpr double PI = std::numbers::pi;
constexpr double TWO_PI = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
  double w = std::fmod(phi, TWO_PI);
  if (w < 0.0) w += TWO_PI;
  if (w >= TWO_PI) w = 0.0;
  return w;
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Scanner {
  const DirectionObjective& objective;
  int k;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> best_angles;
  std::uint64_t evaluations = 0;

  // Axes hold candidate values for (theta_0, phi_0[, theta_1, phi_1]).
  // Candidates are visited in ascending lexicographic order with a
  // strict-improvement rule, so the first of any tied set wins.
  void scan(const std::vector<std::vector<double>>& axes) {
    const std::size_t m = axes.size();
    std::vector<std::size_t> idx(m, 0);
    std::vector<double> angles(m);
    std::vector<Direction> dirs;
    dirs.reserve(k);
    while (true) {
      dirs.clear();
      for (std::size_t i = 0; i < m; ++i) angles[i] = axes[i][idx[i]];
      for (int d = 0; d < k; ++d) dirs.emplace_back(angles[2 * d], angles[2 * d + 1]);
      const double v = objective(dirs);
      ++evaluations;
      if (!std::isfinite(v))
        throw NumericalError("objective returned a non-finite value", angles);
      if (v > best_value) {
        best_value = v;
        best_angles = angles;
      }
      std::size_t pos = m;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < axes[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) return;
      }
    }
  }
};

}  // namespace

OptResult maximize_over_directions(const DirectionObjective& objective, int k, double grid_step,
                                   int refine_iters) {
  if (k != 1 && k != 2) throw std::invalid_argument("direction count must be 1 or 2");
  if (!(grid_step > 0.0) || grid_step > PI / 8.0 + 1e-15)
    throw std::invalid_argument("grid_step must lie in (0, pi/8]");
  if (refine_iters < 0) throw std::invalid_argument("refine_iters must be nonnegative");

  std::vector<double> thetas;
  for (int i = 0;; ++i) {
    const double t = i * grid_step;
    if (t > PI + 1e-12) break;
    thetas.push_back(std::min(t, PI));
  }
  if (thetas.back() < PI - 1e-12) thetas.push_back(PI);
  std::vector<double> phis;
  for (int i = 0;; ++i) {
    const double p = i * grid_step;
    if (p >= TWO_PI - 1e-12) break;
    phis.push_back(p);
  }

  Scanner scanner{.objective = objective, .k = k};
  std::vector<std::vector<double>> axes;
  for (int d = 0; d < k; ++d) {
    axes.push_back(thetas);
    axes.push_back(phis);
  }
  scanner.scan(axes);

  double step = grid_step;
  for (int round = 0; round < refine_iters; ++round) {
    step *= 0.25;
    std::vector<std::vector<double>> local(2 * static_cast<std::size_t>(k));
    for (int d = 0; d < k; ++d) {
      std::vector<double>& ts = local[2 * d];
      std::vector<double>& ps = local[2 * d + 1];
      const double t0 = scanner.best_angles[2 * d];
      const double p0 = scanner.best_angles[2 * d + 1];
      for (int j = -4; j <= 4; ++j) {
        ts.push_back(std::clamp(t0 + j * step, 0.0, PI));
        ps.push_back(wrap_phi(p0 + j * step));
      }
      sort_unique(ts);
      sort_unique(ps);
    }
    scanner.scan(local);
  }

  OptResult out;
  out.best_value = scanner.best_value;
  out.evaluations = scanner.evaluations;
  for (int d = 0; d < k; ++d)
    out.best_directions.emplace_back(scanner.best_angles[2 * d], scanner.best_angles[2 * d + 1]);
  return out;
}

}  // namespace steerkit
