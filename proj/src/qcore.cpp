#include "steerkit/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace steerkit {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  require(dim > 0, "matrix dimension must be positive");
  a_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
  require(dim > 0, "matrix dimension must be positive");
  require(a_.size() == static_cast<std::size_t>(dim) * dim, "entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require(dim_ == o.dim_, "dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require(dim_ == o.dim_, "dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
    }
  return r;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = a.dim();
  double re = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex& x = a.at(i, j);
      const Complex& y = b.at(j, i);
      re += x.real() * y.real() - x.imag() * y.imag();
    }
  return re;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector operator+(const BlochVector& a, const BlochVector& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
BlochVector operator-(const BlochVector& a, const BlochVector& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
BlochVector operator*(double s, const BlochVector& v) { return {s * v.x, s * v.y, s * v.z}; }

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
  return ComplexMatrix(2, {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)});
}

ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix spin_observable(const BlochVector& v) {
  ComplexMatrix m(2);
  m.at(0, 0) = v.z;
  m.at(0, 1) = Complex(v.x, -v.y);
  m.at(1, 0) = Complex(v.x, v.y);
  m.at(1, 1) = -v.z;
  return m;
}

namespace {

// Eigenvalues of [[a, b], [conj(b), d]] with a, d real.
void eig2(double a, double d, Complex b, double out[2]) {
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double rad = std::sqrt(half * half + std::norm(b));
  out[0] = mean - rad;
  out[1] = mean + rad;
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m.at(i, j));
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const int n = h.dim();
  require(n >= 1, "empty matrix");
  require(h.hermiticity_defect() <= EIG_TOL, "matrix is not Hermitian within EIG_TOL");

  if (n == 1) return {h.at(0, 0).real()};
  if (n == 2) {
    double ev[2];
    eig2(h.at(0, 0).real(), h.at(1, 1).real(), 0.5 * (h.at(0, 1) + std::conj(h.at(1, 0))), ev);
    return {ev[0], ev[1]};
  }

  // Cyclic Jacobi with complex rotations. A <- U^dag A U, where the (p,q)
  // block of U is [[c, s e^{i beta}], [-s e^{-i beta}, c]] and beta is the
  // phase of A[p][q].
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= JACOBI_OFF_TOL) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const Complex phase = apq / r;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Columns: col_p <- c col_p - s conj(phase) col_q ; col_q <- s phase col_p + c col_q.
        for (int k = 0; k < n; ++k) {
          const Complex cp = a.at(k, p), cq = a.at(k, q);
          a.at(k, p) = c * cp - s * std::conj(phase) * cq;
          a.at(k, q) = s * phase * cp + c * cq;
        }
        // Rows: row_p <- c row_p - s phase row_q ; row_q <- s conj(phase) row_p + c row_q.
        for (int k = 0; k < n; ++k) {
          const Complex rp = a.at(p, k), rq = a.at(q, k);
          a.at(p, k) = c * rp - s * phase * rq;
          a.at(q, k) = s * std::conj(phase) * rp + c * rq;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a.at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

double max_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h).back(); }
double min_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h).front(); }

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  require(m_.dim() >= 2, "density matrix must be at least 2x2");
  const double hd = m_.hermiticity_defect();
  require(hd <= HERM_TOL, "density matrix is not Hermitian (defect " + std::to_string(hd) + ")");
  const Complex t = m_.trace();
  require(std::abs(t.real() - 1.0) <= TRACE_TOL && std::abs(t.imag()) <= TRACE_TOL,
          "density matrix trace is not 1");
  const double lo = min_eigenvalue(m_);
  require(lo >= -PSD_TOL, "density matrix has a negative eigenvalue (" + std::to_string(lo) + ")");
}

PureState::PureState(int dim, std::vector<Complex> amplitudes) : dim_(dim), amps_(std::move(amplitudes)) {
  require(dim >= 2, "state dimension must be at least 2");
  require(amps_.size() == static_cast<std::size_t>(dim), "amplitude count does not match dimension");
  double n2 = 0.0;
  for (const auto& a : amps_) n2 += std::norm(a);
  require(std::abs(std::sqrt(n2) - 1.0) <= 1e-12, "state vector is not normalized");
}

DensityMatrix PureState::to_density() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i, j) = amps_[i] * std::conj(amps_[j]);
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  require(n >= 1, "no subsystems");
  int total = 1;
  for (int d : dims) {
    require(d >= 2, "subsystem dimensions must be at least 2");
    total *= d;
  }
  require(total == rho.dim(), "subsystem dimensions do not match the state");
  require(!keep.empty(), "keep set must be nonempty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] >= 0 && keep[i] < n, "keep index out of range");
    if (i > 0) require(keep[i] > keep[i - 1], "keep indices must be strictly increasing");
  }

  std::vector<int> stride(n);
  int acc = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride[i] = acc;
    acc *= dims[i];
  }

  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;

  int out_dim = 1;
  for (int k : keep) out_dim *= dims[k];

  auto kept_index = [&](int full) {
    int out = 0;
    for (int i = 0; i < n; ++i) {
      if (!kept[i]) continue;
      out = out * dims[i] + (full / stride[i]) % dims[i];
    }
    return out;
  };
  auto traced_index = [&](int full) {
    int out = 0;
    for (int i = 0; i < n; ++i) {
      if (kept[i]) continue;
      out = out * dims[i] + (full / stride[i]) % dims[i];
    }
    return out;
  };

  ComplexMatrix out(out_dim);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c) {
      if (traced_index(r) != traced_index(c)) continue;
      out.at(kept_index(r), kept_index(c)) += rho.matrix().at(r, c);
    }
  return DensityMatrix(std::move(out));
}

BlochVector bloch_of(const DensityMatrix& rho) {
  require(rho.dim() == 2, "bloch_of expects a qubit state");
  BlochVector n;
  n.x = real_trace_product(rho.matrix(), pauli_x());
  n.y = real_trace_product(rho.matrix(), pauli_y());
  n.z = real_trace_product(rho.matrix(), pauli_z());
  return n;
}

DensityMatrix bloch_to_state(const BlochVector& n) {
  require(n.norm() <= 1.0 + BLOCH_NORM_TOL, "Bloch vector lies outside the unit ball");
  ComplexMatrix m = spin_observable(n);
  m += ComplexMatrix::identity(2);
  m *= Complex(0.5, 0.0);
  return DensityMatrix(std::move(m));
}

}  // namespace steerkit
