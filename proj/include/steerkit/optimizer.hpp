#pragma once

#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "steerkit/measure.hpp"

namespace steerkit {

inline constexpr double OPT_DEFAULT_GRID_STEP = std::numbers::pi / 60.0;
inline constexpr int OPT_DEFAULT_REFINE_ITERS = 6;

struct OptResult {
  double best_value = 0.0;
  std::vector<Direction> best_directions;
  std::uint64_t evaluations = 0;
};

using DirectionObjective = std::function<double(const std::vector<Direction>&)>;

// Deterministic maximization of a smooth objective over k (1 or 2) Bloch
// directions: full coarse grid (theta step = phi step = grid_step), then
// refine_iters rounds of local grids around the incumbent, shrinking the
// step by 4 each round. Candidates are scanned in ascending lexicographic
// angle order with strict-improvement updates, so ties resolve to the
// smallest (theta, phi) tuple and reruns are bit-identical. Throws
// NumericalError when the objective returns a non-finite value.
OptResult maximize_over_directions(const DirectionObjective& objective, int k,
                                   double grid_step = OPT_DEFAULT_GRID_STEP,
                                   int refine_iters = OPT_DEFAULT_REFINE_ITERS);

}  // namespace steerkit
