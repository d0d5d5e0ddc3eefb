#pragma once

#include <complex>
#include <vector>

#include "steerkit/constants.hpp"

namespace steerkit {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Sized for qubit registers
// (2/4/8), general small dims allowed internally (e.g. 3x3 correlation
// matrices).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  const std::vector<Complex>& entries() const { return a_; }

  Complex& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double hermiticity_defect() const;  // max_ij |a_ij - conj(a_ji)|

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

// Kronecker product, first factor leftmost (most significant index).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Re tr(a * b) without forming the product.
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

BlochVector operator+(const BlochVector& a, const BlochVector& b);
BlochVector operator-(const BlochVector& a, const BlochVector& b);
BlochVector operator*(double s, const BlochVector& v);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// v.sigma for an arbitrary real 3-vector v (not necessarily unit).
ComplexMatrix spin_observable(const BlochVector& v);

// Validated quantum state: Hermitian within HERM_TOL, unit trace within
// TRACE_TOL, smallest eigenvalue >= -PSD_TOL. Throws std::invalid_argument.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  int dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

// Normalized state vector (norm 1 within 1e-12).
class PureState {
 public:
  PureState(int dim, std::vector<Complex> amplitudes);

  int dim() const { return dim_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  DensityMatrix to_density() const;

 private:
  int dim_ = 0;
  std::vector<Complex> amps_;
};

// All eigenvalues of a Hermitian matrix, ascending. Closed form for 2x2,
// cyclic Jacobi otherwise (off-diagonal norm target JACOBI_OFF_TOL).
// Requires hermiticity defect <= EIG_TOL.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
double max_eigenvalue(const ComplexMatrix& h);
double min_eigenvalue(const ComplexMatrix& h);

// Partial trace over the parties NOT listed in `keep`. `dims` are the local
// dimensions in tensor order (first factor leftmost), `keep` is a strictly
// increasing nonempty list of party indices.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

// n_i = Re tr(rho sigma_i) for a qubit state.
BlochVector bloch_of(const DensityMatrix& rho);

// (I + n.sigma)/2; requires |n| <= 1 + BLOCH_NORM_TOL.
DensityMatrix bloch_to_state(const BlochVector& n);

}  // namespace steerkit
