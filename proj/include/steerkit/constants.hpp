#pragma once

// Central tolerance table. Every magic epsilon in the library lives here.

namespace steerkit {

inline constexpr double HERM_TOL = 1e-12;        // allowed Hermiticity defect of a density matrix
inline constexpr double TRACE_TOL = 1e-12;       // allowed |tr(rho) - 1|
inline constexpr double PSD_TOL = 1e-10;         // eigenvalue floor: min eig >= -PSD_TOL
inline constexpr double EIG_TOL = 1e-10;         // Hermiticity required by the eigensolvers
inline constexpr double JACOBI_OFF_TOL = 1e-13;  // off-diagonal Frobenius norm convergence target
inline constexpr double DEGENERATE_TOL = 1e-12;  // conditioning marginal at or below this is degenerate
inline constexpr double VERDICT_SLACK = 1e-9;    // strict-inequality slack for steerability verdicts
inline constexpr double ORTHO_TOL = 1e-9;        // allowed |p.q| for Bob's observable pair
inline constexpr double BLOCH_NORM_TOL = 1e-10;  // allowed excess of |n| over 1 in bloch_to_state

}  // namespace steerkit
