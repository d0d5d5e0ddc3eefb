#pragma once

#include <optional>
#include <vector>

#include "steerkit/qcore.hpp"

namespace steerkit {

// Measurement axis on the Bloch sphere, theta in [0, pi], phi in [0, 2 pi)
// (phi is wrapped on construction). The derived unit vector is cached;
// components within 5e-16 of {-1, 0, 1} are snapped so that the coordinate
// axes are exact.
class Direction {
 public:
  Direction(double theta, double phi);

  static Direction z_axis() { return {0.0, 0.0}; }
  static Direction x_axis();
  static Direction y_axis();
  static Direction from_unit(const BlochVector& v);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  const BlochVector& unit() const { return unit_; }

 private:
  double theta_;
  double phi_;
  BlochVector unit_;
};

// Outcome bit: 0 is spin up (+1 eigenvalue), 1 is spin down (-1).
enum class Outcome : int { Up = 0, Down = 1 };

inline int outcome_bit(Outcome o) { return static_cast<int>(o); }
inline double outcome_sign(Outcome o) { return o == Outcome::Up ? 1.0 : -1.0; }

// Which party measures along which axis; unmeasured parties carry nullopt.
// At least one party must be measured.
class MeasurementLayout {
 public:
  explicit MeasurementLayout(std::vector<std::optional<Direction>> parties);

  static MeasurementLayout single(int n_parties, int party, const Direction& d);
  static MeasurementLayout two(int n_parties, int party_a, const Direction& da, int party_b,
                               const Direction& db);

  int n_parties() const { return static_cast<int>(parties_.size()); }
  int n_measured() const;
  const std::vector<std::optional<Direction>>& parties() const { return parties_; }

 private:
  std::vector<std::optional<Direction>> parties_;
};

// Rank-1 projector (I + s n.sigma)/2, s = +1 for Up, -1 for Down.
ComplexMatrix projector(const Direction& d, Outcome o);

// P(outcomes | layout) on a register of qubits. `outcomes` lists the outcome
// of each measured party in party order. Raw variant keeps the unclamped
// trace value for diagnostics; joint_prob clamps to [0, 1].
double joint_prob_raw(const DensityMatrix& rho, const MeasurementLayout& layout,
                      const std::vector<Outcome>& outcomes);
double joint_prob(const DensityMatrix& rho, const MeasurementLayout& layout,
                  const std::vector<Outcome>& outcomes);

// P(target outcome | conditioning outcome). Throws DegenerateConditionError
// when the conditioning marginal is <= DEGENERATE_TOL.
double conditional_prob(const DensityMatrix& rho, int cond_party, const Direction& cond_dir,
                        Outcome cond_out, int target_party, const Direction& target_dir,
                        Outcome target_out);

}  // namespace steerkit
