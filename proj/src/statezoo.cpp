#include "steerkit/statezoo.hpp"

#include <cmath>
#include <stdexcept>

namespace steerkit {

PureState bell_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState(4, {Complex(r, 0.0), 0.0, 0.0, Complex(r, 0.0)});
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing weight must lie in [0, 1]");
  ComplexMatrix m = bell_phi_plus().to_density().matrix();
  m *= Complex(p, 0.0);
  ComplexMatrix iso = ComplexMatrix::identity(4);
  iso *= Complex(0.25 * (1.0 - p), 0.0);
  m += iso;
  return DensityMatrix(std::move(m));
}

PureState pure_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("Schmidt weight must lie in [0, 1]");
  return PureState(4, {Complex(std::sqrt(alpha), 0.0), 0.0, 0.0, Complex(std::sqrt(1.0 - alpha), 0.0)});
}

DensityMatrix tripartite_family(TripartiteKind kind, std::optional<std::uint64_t> seed, double alpha) {
  switch (kind) {
    case TripartiteKind::Ghz: {
      const double r = 1.0 / std::sqrt(2.0);
      std::vector<Complex> amps(8, 0.0);
      amps[0] = Complex(r, 0.0);
      amps[7] = Complex(r, 0.0);
      return PureState(8, std::move(amps)).to_density();
    }
    case TripartiteKind::W: {
      const double r = 1.0 / std::sqrt(3.0);
      std::vector<Complex> amps(8, 0.0);
      amps[1] = Complex(r, 0.0);
      amps[2] = Complex(r, 0.0);
      amps[4] = Complex(r, 0.0);
      return PureState(8, std::move(amps)).to_density();
    }
    case TripartiteKind::ProductExtension: {
      ComplexMatrix zero(2);
      zero.at(0, 0) = 1.0;
      ComplexMatrix m = kron(pure_alpha(alpha).to_density().matrix(), zero);
      return DensityMatrix(std::move(m));
    }
    case TripartiteKind::RandomPure: {
      if (!seed.has_value())
        throw std::invalid_argument("random tripartite states require a seed");
      Rng rng(*seed);
      return random_pure_state(8, rng).to_density();
    }
  }
  throw std::invalid_argument("unknown tripartite family");
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("partial transpose is implemented for 4x4 only");
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          // <i j| out |k l> = <i l| m |k j>
          out.at(2 * i + j, 2 * k + l) = m.at(2 * i + l, 2 * k + j);
  return out;
}

double negativity(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("negativity is implemented for two qubits only");
  const std::vector<double> ev = hermitian_eigenvalues(partial_transpose_b(rho.matrix()));
  double s = 0.0;
  for (double v : ev)
    if (v < 0.0) s -= v;
  return s;
}

PureState random_pure_state(int dim, Rng& rng) {
  std::vector<Complex> amps(static_cast<std::size_t>(dim));
  double n2 = 0.0;
  for (auto& a : amps) {
    a = Complex(rng.normal(), rng.normal());
    n2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
  return PureState(dim, std::move(amps));
}

DensityMatrix random_density_matrix(int dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g.at(i, j) = Complex(rng.normal(), rng.normal());
  ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= Complex(1.0 / tr, 0.0);
  // Exact Hermitization; g g^dag is Hermitian up to rounding.
  ComplexMatrix h(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  for (int i = 0; i < dim; ++i) h.at(i, i) = Complex(h.at(i, i).real(), 0.0);
  return DensityMatrix(std::move(h));
}

}  // namespace steerkit
