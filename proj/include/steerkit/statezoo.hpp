#pragma once

#include <cstdint>
#include <optional>

#include "steerkit/qcore.hpp"
#include "steerkit/rng.hpp"

namespace steerkit {

// (|00> + |11>)/sqrt(2).
PureState bell_phi_plus();

// p |Phi+><Phi+| + (1 - p) I/4, p in [0, 1].
DensityMatrix werner(double p);

// sqrt(alpha)|00> + sqrt(1 - alpha)|11>, alpha in [0, 1].
PureState pure_alpha(double alpha);

enum class TripartiteKind { Ghz, W, ProductExtension, RandomPure };

// Three-qubit test states. ProductExtension is pure_alpha(alpha) on AB with
// Charlie fixed in |0>; RandomPure draws Haar-like amplitudes and requires a
// seed.
DensityMatrix tripartite_family(TripartiteKind kind, std::optional<std::uint64_t> seed = {},
                                double alpha = 0.5);

// Partial transpose over the second qubit of a two-qubit matrix.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m);

// Sum of |negative eigenvalues| of the partial transpose: positive iff the
// two-qubit state is entangled (PPT criterion, decisive at this dimension).
double negativity(const DensityMatrix& rho);

// Seeded ensembles used by property tests.
PureState random_pure_state(int dim, Rng& rng);
DensityMatrix random_density_matrix(int dim, Rng& rng);  // Ginibre G G^dag / tr

}  // namespace steerkit
