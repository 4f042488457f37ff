#include "unruhlab/tensor.hpp"

namespace unruhlab {

StateDiagnostics diagnose(const ComplexMatrix& m) {
  StateDiagnostics d;
  d.finite = m.allFinite();
  if (!d.finite || m.rows() != m.cols()) {
    d.finite = false;
    return d;
  }
  d.hermitian_error = max_hermitian_asymmetry(m);
  d.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  if (d.hermitian_error <= kHermitianTolerance) {
    d.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
  } else {
    d.min_eigenvalue = -std::numeric_limits<double>::infinity();
  }
  return d;
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix)
    : DensityMatrix(std::move(dims), std::move(matrix), UncheckedTag{}) {
  const StateDiagnostics d = diagnose(matrix_);
  if (!d.finite) throw InvalidState("density matrix has non-finite entries");
  if (d.hermitian_error > kStateTolerance) {
    throw NonHermitian("density matrix is not Hermitian (asymmetry " +
                       std::to_string(d.hermitian_error) + ")");
  }
  if (d.trace_error > kStateTolerance) {
    throw InvalidState("density matrix trace deviates from 1 by " + std::to_string(d.trace_error));
  }
  if (d.min_eigenvalue < -kStateTolerance) {
    throw NotPositive("density matrix has eigenvalue " + std::to_string(d.min_eigenvalue));
  }
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix, UncheckedTag)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  for (int d : dims_) {
    if (d < 2) throw DimMismatch("subsystem dimensions must be at least 2");
  }
  detail::check_dims(dims_, matrix_.rows(), matrix_.cols());
}

DensityMatrix DensityMatrix::unchecked(Dims dims, ComplexMatrix matrix) {
  return DensityMatrix(std::move(dims), std::move(matrix), UncheckedTag{});
}

DensityMatrix pure_state(Dims dims, const Eigen::VectorXcd& amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw InvalidState("zero state vector");
  const Eigen::VectorXcd v = amplitudes / norm;
  ComplexMatrix m = v * v.adjoint();
  return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(std::move(dims), kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw InvalidSubsystem("no subsystem kept");

  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.dims(), sorted);
  Dims dims;
  for (int k : sorted) dims.push_back(rho.dims()[static_cast<std::size_t>(k)]);
  return DensityMatrix::unchecked(std::move(dims), std::move(reduced));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  const int keep_list[] = {keep};
  return partial_trace(rho, std::span<const int>(keep_list));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  return partial_transpose(rho.matrix(), rho.dims(), subsystem);
}

double entropy_bits(const RealVector& eigenvalues) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda <= 1e-15) continue;  // includes rounding-level negatives
    h -= lambda * std::log2(lambda);
  }
  return std::max(h, 0.0);
}

double shannon_entropy_bits(const RealVector& probabilities) { return entropy_bits(probabilities); }

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(hermitian_eigenvalues(rho.matrix()));
}

}  // namespace unruhlab
