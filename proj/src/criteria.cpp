#include "steerkit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steerkit {

MeasurementSet::MeasurementSet(std::vector<Direction> directions) : directions_(std::move(directions)) {
  if (directions_.size() < 2) throw std::invalid_argument("measurement set needs at least two axes");
  for (std::size_t i = 0; i < directions_.size(); ++i)
    for (std::size_t j = i + 1; j < directions_.size(); ++j) {
      const double overlap =
          std::clamp(directions_[i].unit().dot(directions_[j].unit()), -1.0, 1.0);
      if (std::acos(overlap) <= 1e-6)
        throw std::invalid_argument("measurement axes must be pairwise distinct");
    }
}

std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("correlation matrix needs a two-qubit state");
  const ComplexMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = real_trace_product(rho.matrix(), kron(sig[i], sig[j]));
  return t;
}

double chsh_max(const DensityMatrix& rho) {
  const auto t = correlation_matrix(rho);
  ComplexMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += t[k][i] * t[k][j];
      m.at(i, j) = v;
    }
  const std::vector<double> ev = hermitian_eigenvalues(m);
  return 2.0 * std::sqrt(std::max(0.0, ev[2] + ev[1]));
}

double saunders_bound(const MeasurementSet& set) {
  const int n = set.size();
  if (n > 16) throw std::invalid_argument("sign enumeration refused for more than 16 axes");
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    BlochVector v{0.0, 0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const double s = (mask >> k) & 1u ? -1.0 : 1.0;
      v = v + s * set.directions()[static_cast<std::size_t>(k)].unit();
    }
    best = std::max(best, max_eigenvalue(spin_observable(v)));
  }
  return best / n;
}

double saunders_lhs(const DensityMatrix& rho, const MeasurementSet& set) {
  if (rho.dim() != 4) throw std::invalid_argument("steering functional needs a two-qubit state");
  double sum = 0.0;
  for (const Direction& d : set.directions()) {
    const BlochVector b = d.unit();
    const BlochVector partner{b.x, -b.y, b.z};
    sum += real_trace_product(rho.matrix(), kron(spin_observable(partner), spin_observable(b)));
  }
  return sum / set.size();
}

}  // namespace steerkit
