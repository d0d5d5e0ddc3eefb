#pragma once

#include <array>
#include <vector>

#include "steerkit/measure.hpp"
#include "steerkit/qcore.hpp"

namespace steerkit {

// Ordered list of at least two pairwise-distinct measurement axes
// (separation > 1e-6 rad).
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<Direction> directions);

  int size() const { return static_cast<int>(directions_.size()); }
  const std::vector<Direction>& directions() const { return directions_; }

 private:
  std::vector<Direction> directions_;
};

// T_ij = Re tr(rho sigma_i x sigma_j).
std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho);

// Largest CHSH value reachable with projective measurements:
// 2 sqrt(t1 + t2), t1 >= t2 the top eigenvalues of T^t T.
double chsh_max(const DensityMatrix& rho);

// Linear steering threshold for `n` axes: max over sign patterns s of
// lambda_max(sum_k s_k n_k.sigma)/n. Refuses n > 16 (2^n enumeration).
double saunders_bound(const MeasurementSet& set);

// Value of the linear steering functional (1/n) sum_k <A_k sigma_k> with
// A_k the outcome of Alice measuring the partner axis (n_x, -n_y, n_z):
// the axis whose outcomes correlate positively through |Phi+>. For
// p |Phi+><Phi+| + (1-p) I/4 this equals p for every choice of axes.
double saunders_lhs(const DensityMatrix& rho, const MeasurementSet& set);

}  // namespace steerkit
