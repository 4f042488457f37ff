#pragma once

// Dense complex linear algebra for small multipartite density matrices.
//
// Subsystem ordering is big-endian: for dims (d0, d1, ..., dn) the basis
// index of |i0 i1 ... in> is ((i0 * d1 + i1) * d2 + i2) ...

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "unruhlab/errors.hpp"

namespace unruhlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<int>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kHermitianTolerance = 1e-8;
inline constexpr double kStateTolerance = 1e-10;

// ---------------------------------------------------------------------------
// Kronecker product

template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  DenseMatrix<typename DerivedA::Scalar> out = Eigen::kroneckerProduct(a.eval(), b.eval());
  return out;
}

// ---------------------------------------------------------------------------
// Multi-index helpers

namespace detail {

inline std::size_t total_dim(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         [](std::size_t acc, int d) { return acc * static_cast<std::size_t>(d); });
}

inline void check_dims(std::span<const int> dims, Eigen::Index rows, Eigen::Index cols) {
  if (dims.empty()) throw DimMismatch("empty subsystem dimension list");
  for (int d : dims) {
    if (d < 1) throw DimMismatch("subsystem dimension must be positive");
  }
  if (rows != cols) throw NotSquare("matrix is not square");
  if (static_cast<std::size_t>(rows) != total_dim(dims)) {
    throw DimMismatch("matrix size " + std::to_string(rows) + " does not match product of dims");
  }
}

// Stride of subsystem k in the big-endian layout.
inline std::size_t stride_of(std::span<const int> dims, std::size_t k) {
  std::size_t s = 1;
  for (std::size_t j = k + 1; j < dims.size(); ++j) s *= static_cast<std::size_t>(dims[j]);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Partial trace: keeps the listed subsystems (in ascending order), traces the rest.

template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                                    std::span<const int> dims,
                                                    std::span<const int> keep) {
  using Scalar = typename Derived::Scalar;
  detail::check_dims(dims, m.rows(), m.cols());

  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) {
      throw InvalidSubsystem("subsystem index " + std::to_string(k) + " out of range");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }

  const std::size_t n = detail::total_dim(dims);
  std::vector<std::size_t> kept_index(n, 0);
  std::vector<std::size_t> traced_index(n, 0);
  std::size_t kept_dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    std::size_t ki = 0;
    std::size_t ti = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t stride = detail::stride_of(dims, k);
      const std::size_t digit = rest / stride;
      rest %= stride;
      if (kept[k]) {
        ki = ki * static_cast<std::size_t>(dims[k]) + digit;
      } else {
        ti = ti * static_cast<std::size_t>(dims[k]) + digit;
      }
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (kept[k]) kept_dim *= static_cast<std::size_t>(dims[k]);
  }

  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(kept_dim),
                                                      static_cast<Eigen::Index>(kept_dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (traced_index[i] != traced_index[j]) continue;
      out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partial transpose on one subsystem.

template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_transpose(const Eigen::MatrixBase<Derived>& m,
                                                        std::span<const int> dims,
                                                        int subsystem) {
  detail::check_dims(dims, m.rows(), m.cols());
  if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size()) {
    throw InvalidSubsystem("subsystem index " + std::to_string(subsystem) + " out of range");
  }
  const std::size_t stride = detail::stride_of(dims, static_cast<std::size_t>(subsystem));
  const std::size_t d = static_cast<std::size_t>(dims[static_cast<std::size_t>(subsystem)]);
  const auto n = static_cast<std::size_t>(m.rows());

  DenseMatrix<typename Derived::Scalar> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / stride) % d;
      const std::size_t ti = i - di * stride + dj * stride;
      const std::size_t tj = j - dj * stride + di * stride;
      out(static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(tj)) =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues by cyclic complex Jacobi rotations.

template <typename Derived>
double max_hermitian_asymmetry(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace detail {

template <typename Real>
Real off_diagonal_norm(const DenseMatrix<std::complex<Real>>& a) {
  Real sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Diagonalizes `a` in place; on return the diagonal holds the eigenvalues.
template <typename Real>
void jacobi_diagonalize(DenseMatrix<std::complex<Real>>& a) {
  using C = std::complex<Real>;
  const Eigen::Index n = a.rows();
  const Real scale = std::max<Real>(Real(1), a.norm());
  const Real target = Real(1e-14) * scale;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const C apq = a(p, q);
        const Real g = std::abs(apq);
        if (g == Real(0)) continue;

        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const C phase = apq / g;  // a(p,q) = g * phase
        const Real theta = (aqq - app) / (Real(2) * g);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;

        // J = diag-phase * real rotation; columns p, q of A <- A J.
        for (Eigen::Index k = 0; k < n; ++k) {
          const C akp = a(k, p);
          const C akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * akp + c * std::conj(phase) * akq;
        }
        // Rows p, q of A <- J^H A.
        for (Eigen::Index k = 0; k < n; ++k) {
          const C apk = a(p, k);
          const C aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = C(0);
        a(q, p) = C(0);
        a(p, p) = C(app - t * g);
        a(q, q) = C(aqq + t * g);
      }
    }
  }
  if (off_diagonal_norm(a) > Real(1e-12) * scale) {
    throw ConvergenceFailure("Jacobi eigensolver did not converge");
  }
}

}  // namespace detail

// Eigenvalues of a Hermitian matrix, ascending. Asymmetry up to `tolerance`
// is removed by symmetrizing (M + M^H) / 2 before solving.
template <typename Derived>
Eigen::Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real, Eigen::Dynamic, 1>
hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m, double tolerance = kHermitianTolerance) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  if (m.rows() != m.cols()) throw NotSquare("eigenvalues requested for a non-square matrix");
  if (!m.allFinite()) throw InvalidState("matrix has non-finite entries");

  DenseMatrix<C> a = m.template cast<C>();
  const double asym = max_hermitian_asymmetry(a);
  if (asym > tolerance) {
    throw NonHermitian("matrix asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  a = (a + a.adjoint()).eval() * Real(0.5);
  detail::jacobi_diagonalize(a);

  Eigen::Matrix<Real, Eigen::Dynamic, 1> values = a.diagonal().real();
  std::sort(values.begin(), values.end());
  return values;
}

// ---------------------------------------------------------------------------
// DensityMatrix

struct StateDiagnostics {
  double hermitian_error = 0;
  double trace_error = 0;      // |tr - 1|, including any imaginary part
  double min_eigenvalue = 0;
  bool finite = true;

  bool valid(double tolerance = kStateTolerance) const {
    return finite && hermitian_error <= tolerance && trace_error <= tolerance &&
           min_eigenvalue >= -tolerance;
  }
};

StateDiagnostics diagnose(const ComplexMatrix& m);

// A ComplexMatrix tagged with its subsystem dimensions. The checked
// constructor enforces Hermiticity, unit trace and positivity at 1e-10.
class DensityMatrix {
 public:
  DensityMatrix(Dims dims, ComplexMatrix matrix);

  // Skips the physical checks (dimensions are still checked). Used for
  // intermediate or deliberately non-normalized matrices.
  static DensityMatrix unchecked(Dims dims, ComplexMatrix matrix);

  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  std::size_t parties() const { return dims_.size(); }

  double trace() const { return matrix_.trace().real(); }

 private:
  struct UncheckedTag {};
  DensityMatrix(Dims dims, ComplexMatrix matrix, UncheckedTag);

  Dims dims_;
  ComplexMatrix matrix_;
};

DensityMatrix pure_state(Dims dims, const Eigen::VectorXcd& amplitudes);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state on a single kept subsystem.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem);

// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy in bits of a spectrum; eigenvalues at or below 1e-15 contribute 0.
double entropy_bits(const RealVector& eigenvalues);

// Shannon entropy in bits of a probability vector, with 0 log 0 = 0.
double shannon_entropy_bits(const RealVector& probabilities);

}  // namespace unruhlab
