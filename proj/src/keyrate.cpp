#include "steerkit/keyrate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "steerkit/errors.hpp"
#include "steerkit/optimizer.hpp"

namespace steerkit {

namespace {

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void require_three_qubits(const DensityMatrix& rho) {
  if (rho.dim() != 8) throw std::invalid_argument("a three-qubit state is required");
}

}  // namespace

TripartiteSetting::TripartiteSetting(Direction alice_s_, Direction alice_t_, Direction bob_p_,
                                     Direction bob_q_, Direction charlie_s_, Direction charlie_t_,
                                     Outcome a_, Outcome b_, Outcome c_)
    : alice_s(alice_s_),
      alice_t(alice_t_),
      bob_p(bob_p_),
      bob_q(bob_q_),
      charlie_s(charlie_s_),
      charlie_t(charlie_t_),
      a(a_),
      b(b_),
      c(c_) {
  const double overlap = bob_p.unit().dot(bob_q.unit());
  if (std::abs(overlap) > ORTHO_TOL)
    throw std::invalid_argument("Bob's observables must be orthogonal (|p.q| = " +
                                std::to_string(std::abs(overlap)) + ")");
}

TPair t_pair(const DensityMatrix& rho, const TripartiteSetting& s) {
  require_three_qubits(rho);
  TPair t;
  t.t_ab = conditional_prob(rho, 0, s.alice_s, s.a, 1, s.bob_p, s.b) +
           conditional_prob(rho, 0, s.alice_t, s.a, 1, s.bob_q, s.b);
  t.t_bc = conditional_prob(rho, 2, s.charlie_s, s.c, 1, s.bob_p, s.b) +
           conditional_prob(rho, 2, s.charlie_t, s.c, 1, s.bob_q, s.b);
  return t;
}

MonogamyResult monogamy_check(const DensityMatrix& rho, const TripartiteSetting& s) {
  const TPair t = t_pair(rho, s);
  MonogamyResult r;
  r.t_ab = t.t_ab;
  r.t_bc = t.t_bc;
  r.average = 0.5 * (t.t_ab + t.t_bc);
  r.satisfied = r.average <= scenario1_bound() + VERDICT_SLACK;
  return r;
}

double mutual_information(const ProbTable22& joint) {
  double sum = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (joint[i][j] < 0.0) throw std::invalid_argument("probability table has a negative entry");
      sum += joint[i][j];
    }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("probability table does not sum to 1");

  const double r0 = joint[0][0] + joint[0][1];
  const double r1 = joint[1][0] + joint[1][1];
  const double c0 = joint[0][0] + joint[1][0];
  const double c1 = joint[0][1] + joint[1][1];
  double info = -xlog2(r0) - xlog2(r1) - xlog2(c0) - xlog2(c1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) info += xlog2(joint[i][j]);
  return info < 0.0 ? 0.0 : info;
}

namespace {

ProbTable22 mixed_rounds_table(const DensityMatrix& rho, int partner, const Direction& partner_s,
                               const Direction& partner_t, const Direction& bob_p,
                               const Direction& bob_q) {
  ProbTable22 t{};
  const Outcome outs[2] = {Outcome::Up, Outcome::Down};
  for (int bb = 0; bb < 2; ++bb)
    for (int oo = 0; oo < 2; ++oo) {
      const MeasurementLayout round_s = MeasurementLayout::two(3, partner, partner_s, 1, bob_p);
      const MeasurementLayout round_t = MeasurementLayout::two(3, partner, partner_t, 1, bob_q);
      // Outcome vectors follow ascending party order.
      std::vector<Outcome> o_s, o_t;
      if (partner < 1) {
        o_s = {outs[oo], outs[bb]};
        o_t = {outs[oo], outs[bb]};
      } else {
        o_s = {outs[bb], outs[oo]};
        o_t = {outs[bb], outs[oo]};
      }
      t[bb][oo] = 0.5 * joint_prob(rho, round_s, o_s) + 0.5 * joint_prob(rho, round_t, o_t);
    }
  return t;
}

}  // namespace

ProbTable22 joint_table_ab(const DensityMatrix& rho, const TripartiteSetting& s) {
  require_three_qubits(rho);
  return mixed_rounds_table(rho, 0, s.alice_s, s.alice_t, s.bob_p, s.bob_q);
}

ProbTable22 joint_table_cb(const DensityMatrix& rho, const TripartiteSetting& s) {
  require_three_qubits(rho);
  return mixed_rounds_table(rho, 2, s.charlie_s, s.charlie_t, s.bob_p, s.bob_q);
}

double key_rate_exact(const DensityMatrix& rho, const TripartiteSetting& s) {
  return mutual_information(joint_table_ab(rho, s)) - mutual_information(joint_table_cb(rho, s));
}

KeyRateBounds key_rate_bounds(double k) {
  const double c = fur_max_value();
  if (!(k >= 0.0 && k < c))
    throw std::invalid_argument("violation strength must lie in [0, " + std::to_string(c) + ")");
  KeyRateBounds b;
  b.logratio_bits = std::log2((c + k) / (c - k));
  b.linear_bits = 8.0 * k / ((2.0 + std::sqrt(2.0)) * std::log(2.0));
  return b;
}

KeyRateReport key_rate_report(const DensityMatrix& rho, const TripartiteSetting& s) {
  const TPair t = t_pair(rho, s);
  KeyRateReport r;
  r.t_ab = t.t_ab;
  r.t_bc = t.t_bc;
  r.k_violation = 0.5 * t.t_ab - fur_max_value();
  r.i_ba = mutual_information(joint_table_ab(rho, s));
  r.i_bc = mutual_information(joint_table_cb(rho, s));
  r.rate_exact_bits = r.i_ba - r.i_bc;
  if (r.k_violation >= 0.0) {
    const KeyRateBounds b = key_rate_bounds(r.k_violation);
    r.rate_logratio_bits = b.logratio_bits;
    r.rate_linear_bound_bits = b.linear_bits;
  } else {
    r.rate_logratio_bits = std::numeric_limits<double>::quiet_NaN();
    r.rate_linear_bound_bits = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

OptimizedTPair optimize_t_pair(const DensityMatrix& rho, const Direction& bob_p,
                               const Direction& bob_q, Outcome a, Outcome b, Outcome c,
                               double grid_step, int refine_iters) {
  require_three_qubits(rho);
  const TermMax as = conditional_term_max(rho, 0, a, 1, bob_p, b, grid_step, refine_iters);
  const TermMax at = conditional_term_max(rho, 0, a, 1, bob_q, b, grid_step, refine_iters);
  const TermMax cs = conditional_term_max(rho, 2, c, 1, bob_p, b, grid_step, refine_iters);
  const TermMax ct = conditional_term_max(rho, 2, c, 1, bob_q, b, grid_step, refine_iters);
  OptimizedTPair out;
  out.value.t_ab = as.value + at.value;
  out.value.t_bc = cs.value + ct.value;
  out.alice_s = as.direction;
  out.alice_t = at.direction;
  out.charlie_s = cs.direction;
  out.charlie_t = ct.direction;
  return out;
}

WorstCaseCharlie worst_case_charlie(const DensityMatrix& rho, const TripartiteSetting& s,
                                    double grid_step, int refine_iters) {
  require_three_qubits(rho);
  const DirectionObjective objective = [&](const std::vector<Direction>& dirs) {
    const TripartiteSetting probe(s.alice_s, s.alice_t, s.bob_p, s.bob_q, dirs[0], dirs[1], s.a,
                                  s.b, s.c);
    return mutual_information(joint_table_cb(rho, probe));
  };
  const OptResult r = maximize_over_directions(objective, 2, grid_step, refine_iters);
  return {r.best_directions[0], r.best_directions[1], r.best_value};
}

}  // namespace steerkit
