#include "steerkit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

constexpr double AXIS_SNAP = 5e-16;

double snap_component(double v) {
  if (std::abs(v) <= AXIS_SNAP) return 0.0;
  if (std::abs(v - 1.0) <= AXIS_SNAP) return 1.0;
  if (std::abs(v + 1.0) <= AXIS_SNAP) return -1.0;
  return v;
}

double wrap_phi(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

int party_count_for_dim(int dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw std::invalid_argument("state dimension must be 2, 4 or 8");
  }
}

}  // namespace

Direction::Direction(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::invalid_argument("direction angles must be finite");
  if (theta < -1e-12 || theta > std::numbers::pi + 1e-12)
    throw std::invalid_argument("polar angle must lie in [0, pi]");
  theta_ = std::clamp(theta, 0.0, std::numbers::pi);
  phi_ = wrap_phi(phi);
  const double st = std::sin(theta_);
  unit_.x = snap_component(st * std::cos(phi_));
  unit_.y = snap_component(st * std::sin(phi_));
  unit_.z = snap_component(std::cos(theta_));
}

Direction Direction::x_axis() { return {0.5 * std::numbers::pi, 0.0}; }
Direction Direction::y_axis() { return {0.5 * std::numbers::pi, 0.5 * std::numbers::pi}; }

Direction Direction::from_unit(const BlochVector& v) {
  const double n = v.norm();
  if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("direction vector must be unit length");
  const double theta = std::acos(std::clamp(v.z / n, -1.0, 1.0));
  double phi = std::atan2(v.y, v.x);
  return {theta, phi};
}

MeasurementLayout::MeasurementLayout(std::vector<std::optional<Direction>> parties)
    : parties_(std::move(parties)) {
  if (parties_.empty()) throw std::invalid_argument("layout needs at least one party");
  if (n_measured() == 0) throw std::invalid_argument("layout needs at least one measured party");
}

int MeasurementLayout::n_measured() const {
  int n = 0;
  for (const auto& p : parties_)
    if (p.has_value()) ++n;
  return n;
}

MeasurementLayout MeasurementLayout::single(int n_parties, int party, const Direction& d) {
  if (party < 0 || party >= n_parties) throw std::invalid_argument("party index out of range");
  std::vector<std::optional<Direction>> ps(static_cast<std::size_t>(n_parties));
  ps[static_cast<std::size_t>(party)] = d;
  return MeasurementLayout(std::move(ps));
}

MeasurementLayout MeasurementLayout::two(int n_parties, int party_a, const Direction& da, int party_b,
                                         const Direction& db) {
  if (party_a < 0 || party_a >= n_parties || party_b < 0 || party_b >= n_parties)
    throw std::invalid_argument("party index out of range");
  if (party_a == party_b) throw std::invalid_argument("parties must be distinct");
  std::vector<std::optional<Direction>> ps(static_cast<std::size_t>(n_parties));
  ps[static_cast<std::size_t>(party_a)] = da;
  ps[static_cast<std::size_t>(party_b)] = db;
  return MeasurementLayout(std::move(ps));
}

ComplexMatrix projector(const Direction& d, Outcome o) {
  ComplexMatrix m = spin_observable(d.unit());
  m *= Complex(0.5 * outcome_sign(o), 0.0);
  m += ComplexMatrix(2, {0.5, 0.0, 0.0, 0.5});
  return m;
}

double joint_prob_raw(const DensityMatrix& rho, const MeasurementLayout& layout,
                      const std::vector<Outcome>& outcomes) {
  const int n = party_count_for_dim(rho.dim());
  if (layout.n_parties() != n) throw std::invalid_argument("layout party count does not match the state");
  if (static_cast<int>(outcomes.size()) != layout.n_measured())
    throw std::invalid_argument("one outcome per measured party is required");

  ComplexMatrix op(1, {Complex(1.0, 0.0)});
  std::size_t next_out = 0;
  for (const auto& p : layout.parties()) {
    if (p.has_value())
      op = kron(op, projector(*p, outcomes[next_out++]));
    else
      op = kron(op, ComplexMatrix::identity(2));
  }
  return real_trace_product(rho.matrix(), op);
}

double joint_prob(const DensityMatrix& rho, const MeasurementLayout& layout,
                  const std::vector<Outcome>& outcomes) {
  return std::clamp(joint_prob_raw(rho, layout, outcomes), 0.0, 1.0);
}

double conditional_prob(const DensityMatrix& rho, int cond_party, const Direction& cond_dir,
                        Outcome cond_out, int target_party, const Direction& target_dir,
                        Outcome target_out) {
  const int n = party_count_for_dim(rho.dim());
  if (cond_party == target_party) throw std::invalid_argument("parties must be distinct");

  const double marginal =
      joint_prob(rho, MeasurementLayout::single(n, cond_party, cond_dir), {cond_out});
  if (marginal <= DEGENERATE_TOL)
    throw DegenerateConditionError("conditioning outcome has probability " +
                                   std::to_string(marginal));

  std::vector<Outcome> outs;
  if (cond_party < target_party)
    outs = {cond_out, target_out};
  else
    outs = {target_out, cond_out};
  const double joint =
      joint_prob(rho, MeasurementLayout::two(n, cond_party, cond_dir, target_party, target_dir), outs);
  return std::clamp(joint / marginal, 0.0, 1.0);
}

}  // namespace steerkit
