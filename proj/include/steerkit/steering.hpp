#pragma once

#include <cstdint>

#include "steerkit/measure.hpp"
#include "steerkit/optimizer.hpp"
#include "steerkit/qcore.hpp"

namespace steerkit {

// Highest fine-grained game value any single-qubit state can reach when the
// two orthogonal observables are combined with equal weight.
double fur_max_value();

// Two-observable steering bounds: deterministic strategies (Scenario I) and
// uniformly random second observable (Scenario II).
double scenario1_bound();  // 1 + 1/sqrt(2)
double scenario2_bound();  // 3/2

// One steering round: Alice measures s or t, Bob checks p or q. Bob's
// observables must be orthogonal (|p.q| <= ORTHO_TOL).
struct SteeringSetting {
  SteeringSetting(Direction alice_s, Direction alice_t, Direction bob_p, Direction bob_q,
                  Outcome outcome_a, Outcome outcome_b);

  Direction alice_s;
  Direction alice_t;
  Direction bob_p;
  Direction bob_q;
  Outcome outcome_a;
  Outcome outcome_b;
};

enum class Scenario { I, II };

struct SteeringVerdict {
  double functional_value = 0.0;
  double bound = 0.0;
  Scenario scenario = Scenario::I;
  bool steerable = false;
  double margin = 0.0;  // functional_value - bound
};

// Probability of winning the equal-weight two-observable guessing game with
// state rho: 1/2 P(win along p) + 1/2 P(win along q). `win` is the outcome
// that counts as a win for both observables.
double fur_game_value(const DensityMatrix& rho, const Direction& p, const Direction& q, Outcome win);

struct FurGameMax {
  double value = 0.0;
  BlochVector maximizer;  // zero vector when p = -q (every state scores 1/2)
};

// Closed-form maximum of the game value over all qubit states.
FurGameMax fur_game_max(const Direction& p, const Direction& q, Outcome win);

// P(b along p | a along s) + P(b along q | a along t) on a two-qubit state.
double steering_functional(const DensityMatrix& rho, const SteeringSetting& setting);

// Average of the game value over a uniformly random second observable, for a
// qubit with Bloch vector n and fixed first observable p: (2 + n.p)/4.
double scenario2_average(const BlochVector& n, const Direction& p);

// Monte Carlo estimate of scenario2_average. Sampling is chunked with
// per-chunk seeds derived from `seed`, and chunk partial sums are combined
// in chunk order, so the result is reproducible and independent of any
// execution interleaving.
double scenario2_average_mc(const BlochVector& n, const Direction& p, std::uint64_t samples,
                            std::uint64_t seed);

// Steerability call: steerable iff functional > bound + slack.
SteeringVerdict verdict(const DensityMatrix& rho, const SteeringSetting& setting, Scenario scenario,
                        double slack = VERDICT_SLACK);

struct TermMax {
  double value = 0.0;
  Direction direction{0.0, 0.0};
  std::uint64_t evaluations = 0;
};

// Maximum over the conditioning party's axis of
// P(target_out along target_dir | cond_out along the axis). Settings whose
// conditioning marginal is degenerate are dominated (scored below zero)
// rather than treated as errors.
TermMax conditional_term_max(const DensityMatrix& rho, int cond_party, Outcome cond_out,
                             int target_party, const Direction& target_dir, Outcome target_out,
                             double grid_step = OPT_DEFAULT_GRID_STEP,
                             int refine_iters = OPT_DEFAULT_REFINE_ITERS);

struct FunctionalMax {
  double value = 0.0;
  Direction alice_s{0.0, 0.0};
  Direction alice_t{0.0, 0.0};
  std::uint64_t evaluations = 0;
};

// Maximum of the steering functional over Alice's two axes. The functional
// is a sum of one term per axis, so the two maximizations run independently.
FunctionalMax steering_functional_max(const DensityMatrix& rho, const Direction& bob_p,
                                      const Direction& bob_q, Outcome outcome_a, Outcome outcome_b,
                                      double grid_step = OPT_DEFAULT_GRID_STEP,
                                      int refine_iters = OPT_DEFAULT_REFINE_ITERS);

}  // namespace steerkit
