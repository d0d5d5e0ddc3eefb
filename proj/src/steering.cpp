#include "steerkit/steering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "steerkit/errors.hpp"
#include "steerkit/rng.hpp"

namespace steerkit {

double fur_max_value() { return 0.5 + 0.25 * std::sqrt(2.0); }
double scenario1_bound() { return 1.0 + 0.5 * std::sqrt(2.0); }
double scenario2_bound() { return 1.5; }

SteeringSetting::SteeringSetting(Direction alice_s_, Direction alice_t_, Direction bob_p_,
                                 Direction bob_q_, Outcome outcome_a_, Outcome outcome_b_)
    : alice_s(alice_s_),
      alice_t(alice_t_),
      bob_p(bob_p_),
      bob_q(bob_q_),
      outcome_a(outcome_a_),
      outcome_b(outcome_b_) {
  const double overlap = bob_p.unit().dot(bob_q.unit());
  if (std::abs(overlap) > ORTHO_TOL)
    throw std::invalid_argument("Bob's observables must be orthogonal (|p.q| = " +
                                std::to_string(std::abs(overlap)) + ")");
}

double fur_game_value(const DensityMatrix& rho, const Direction& p, const Direction& q, Outcome win) {
  if (rho.dim() != 2) throw std::invalid_argument("game value is defined for a single qubit");
  const MeasurementLayout lp = MeasurementLayout::single(1, 0, p);
  const MeasurementLayout lq = MeasurementLayout::single(1, 0, q);
  return 0.5 * joint_prob(rho, lp, {win}) + 0.5 * joint_prob(rho, lq, {win});
}

FurGameMax fur_game_max(const Direction& p, const Direction& q, Outcome win) {
  const BlochVector sum = p.unit() + q.unit();
  const double len = sum.norm();
  if (len < 1e-12) return {0.5, BlochVector{0.0, 0.0, 0.0}};
  FurGameMax out;
  out.value = 0.5 + 0.25 * len;
  out.maximizer = (outcome_sign(win) / len) * sum;
  return out;
}

double steering_functional(const DensityMatrix& rho, const SteeringSetting& s) {
  if (rho.dim() != 4) throw std::invalid_argument("steering functional needs a two-qubit state");
  const double term_p =
      conditional_prob(rho, 0, s.alice_s, s.outcome_a, 1, s.bob_p, s.outcome_b);
  const double term_q =
      conditional_prob(rho, 0, s.alice_t, s.outcome_a, 1, s.bob_q, s.outcome_b);
  return term_p + term_q;
}

double scenario2_average(const BlochVector& n, const Direction& p) {
  if (n.norm() > 1.0 + BLOCH_NORM_TOL)
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  return 0.25 * (2.0 + n.dot(p.unit()));
}

double scenario2_average_mc(const BlochVector& n, const Direction& p, std::uint64_t samples,
                            std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  if (n.norm() > 1.0 + BLOCH_NORM_TOL)
    throw std::invalid_argument("Bloch vector lies outside the unit ball");

  const double fixed_term = 0.25 * (1.0 + n.dot(p.unit()));
  constexpr std::uint64_t CHUNK = 1u << 16;

  double total = 0.0;
  std::uint64_t done = 0;
  for (std::uint64_t chunk = 0; done < samples; ++chunk) {
    const std::uint64_t count = std::min<std::uint64_t>(CHUNK, samples - done);
    Rng rng(Rng::mix(seed, chunk));
    double part = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const BlochVector q = rng.unit_vector();
      part += 0.25 * (1.0 + n.dot(q));
    }
    total += part;
    done += count;
  }
  return fixed_term + total / static_cast<double>(samples);
}

SteeringVerdict verdict(const DensityMatrix& rho, const SteeringSetting& setting, Scenario scenario,
                        double slack) {
  if (slack < 0.0) throw std::invalid_argument("verdict slack must be nonnegative");
  SteeringVerdict v;
  v.functional_value = steering_functional(rho, setting);
  v.bound = scenario == Scenario::I ? scenario1_bound() : scenario2_bound();
  v.scenario = scenario;
  v.margin = v.functional_value - v.bound;
  v.steerable = v.functional_value > v.bound + slack;
  return v;
}

TermMax conditional_term_max(const DensityMatrix& rho, int cond_party, Outcome cond_out,
                             int target_party, const Direction& target_dir, Outcome target_out,
                             double grid_step, int refine_iters) {
  const DirectionObjective objective = [&](const std::vector<Direction>& dirs) {
    try {
      return conditional_prob(rho, cond_party, dirs[0], cond_out, target_party, target_dir,
                              target_out);
    } catch (const DegenerateConditionError&) {
      return -1.0;
    }
  };
  const OptResult r = maximize_over_directions(objective, 1, grid_step, refine_iters);
  return {r.best_value, r.best_directions[0], r.evaluations};
}

FunctionalMax steering_functional_max(const DensityMatrix& rho, const Direction& bob_p,
                                      const Direction& bob_q, Outcome outcome_a, Outcome outcome_b,
                                      double grid_step, int refine_iters) {
  if (rho.dim() != 4) throw std::invalid_argument("steering functional needs a two-qubit state");
  if (std::abs(bob_p.unit().dot(bob_q.unit())) > ORTHO_TOL)
    throw std::invalid_argument("Bob's observables must be orthogonal");
  const TermMax tp =
      conditional_term_max(rho, 0, outcome_a, 1, bob_p, outcome_b, grid_step, refine_iters);
  const TermMax tq =
      conditional_term_max(rho, 0, outcome_a, 1, bob_q, outcome_b, grid_step, refine_iters);
  FunctionalMax out;
  out.value = tp.value + tq.value;
  out.alice_s = tp.direction;
  out.alice_t = tq.direction;
  out.evaluations = tp.evaluations + tq.evaluations;
  return out;
}

}  // namespace steerkit
