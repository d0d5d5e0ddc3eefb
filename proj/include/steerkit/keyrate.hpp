#pragma once

#include <array>

#include "steerkit/measure.hpp"
#include "steerkit/qcore.hpp"
#include "steerkit/steering.hpp"

namespace steerkit {

// Axes and accepted outcomes for one Alice-Bob-Charlie round. Bob checks p
// in S-basis rounds and q in T-basis rounds; his axes must be orthogonal.
struct TripartiteSetting {
  TripartiteSetting(Direction alice_s, Direction alice_t, Direction bob_p, Direction bob_q,
                    Direction charlie_s, Direction charlie_t, Outcome a, Outcome b, Outcome c);

  Direction alice_s;
  Direction alice_t;
  Direction bob_p;
  Direction bob_q;
  Direction charlie_s;
  Direction charlie_t;
  Outcome a;
  Outcome b;
  Outcome c;
};

struct TPair {
  double t_ab = 0.0;  // P(b_p | a_s) + P(b_q | a_t)
  double t_bc = 0.0;  // P(b_p | c_s') + P(b_q | c_t')
};

TPair t_pair(const DensityMatrix& rho, const TripartiteSetting& setting);

struct MonogamyResult {
  double t_ab = 0.0;
  double t_bc = 0.0;
  double average = 0.0;
  bool satisfied = false;  // average <= 1 + 1/sqrt(2) + VERDICT_SLACK
};

MonogamyResult monogamy_check(const DensityMatrix& rho, const TripartiteSetting& setting);

// Joint probability table over two binary variables; table[i][j] >= 0,
// entries sum to 1 within 1e-10.
using ProbTable22 = std::array<std::array<double, 2>, 2>;

// Mutual information in bits; exact zero-probability terms drop out, tiny
// negative results from rounding clamp to 0.
double mutual_information(const ProbTable22& joint);

// Post-selected sifted-round distributions: equal mixture of the two basis
// rounds. Row index is Bob's outcome, column index the partner's.
ProbTable22 joint_table_ab(const DensityMatrix& rho, const TripartiteSetting& setting);
ProbTable22 joint_table_cb(const DensityMatrix& rho, const TripartiteSetting& setting);

// Csiszar-Korner one-way rate I(B:A) - I(B:C) for the given directions.
double key_rate_exact(const DensityMatrix& rho, const TripartiteSetting& setting);

struct KeyRateBounds {
  double logratio_bits = 0.0;  // log2((c + k)/(c - k)), c = 1/2 + 1/(2 sqrt 2)
  double linear_bits = 0.0;    // 8 k / ((2 + sqrt 2) ln 2)
};

// Violation-strength bounds on the rate; requires 0 <= k < fur_max_value().
KeyRateBounds key_rate_bounds(double k);

struct KeyRateReport {
  double t_ab = 0.0;
  double t_bc = 0.0;
  double k_violation = 0.0;  // t_ab/2 - fur_max_value()
  double i_ba = 0.0;
  double i_bc = 0.0;
  double rate_exact_bits = 0.0;
  // NaN when k_violation < 0 (no violation, bounds not applicable).
  double rate_logratio_bits = 0.0;
  double rate_linear_bound_bits = 0.0;
};

KeyRateReport key_rate_report(const DensityMatrix& rho, const TripartiteSetting& setting);

struct OptimizedTPair {
  TPair value;
  Direction alice_s{0.0, 0.0};
  Direction alice_t{0.0, 0.0};
  Direction charlie_s{0.0, 0.0};
  Direction charlie_t{0.0, 0.0};
};

// Maximizes the four conditional terms independently (each depends on a
// single axis of one party).
OptimizedTPair optimize_t_pair(const DensityMatrix& rho, const Direction& bob_p,
                               const Direction& bob_q, Outcome a, Outcome b, Outcome c,
                               double grid_step = OPT_DEFAULT_GRID_STEP,
                               int refine_iters = OPT_DEFAULT_REFINE_ITERS);

// Worst-case Charlie: his two axes are tuned to maximize I(B:C), without any
// claim of global optimality beyond the grid refinement. The objective
// couples both axes, so this is a joint 2-direction search; the default grid
// is coarser than the per-axis default to keep the 4-coordinate scan cheap.
struct WorstCaseCharlie {
  Direction charlie_s{0.0, 0.0};
  Direction charlie_t{0.0, 0.0};
  double i_bc = 0.0;
};

WorstCaseCharlie worst_case_charlie(const DensityMatrix& rho, const TripartiteSetting& setting,
                                    double grid_step = std::numbers::pi / 12.0,
                                    int refine_iters = OPT_DEFAULT_REFINE_ITERS);

}  // namespace steerkit
