#include "unruhlab/local_ops.hpp"

#include <string>

namespace unruhlab {

MeasurementStrengths MeasurementStrengths::tied(MeasurementKind kind, int dim, double strength) {
  return per_party(kind, dim, strength, strength);
}

MeasurementStrengths MeasurementStrengths::per_party(MeasurementKind kind, int dim, double strength_a,
                                                     double strength_b) {
  const auto levels = static_cast<std::size_t>(dim - 1);
  return {kind, std::vector<double>(levels, strength_a), std::vector<double>(levels, strength_b)};
}

void MeasurementStrengths::validate(int dim_a, int dim_b) const {
  auto check = [](const std::vector<double>& levels, int dim, const char* party) {
    if (levels.size() != static_cast<std::size_t>(dim - 1)) {
      throw BadArity(std::string("party ") + party + " needs " + std::to_string(dim - 1) +
                     " strengths, got " + std::to_string(levels.size()));
    }
    for (double s : levels) {
      if (!(s >= 0.0 && s <= 1.0)) {
        throw BadStrength(std::string("strength ") + std::to_string(s) + " for party " + party +
                          " outside [0, 1]");
      }
    }
  };
  check(party_a, dim_a, "a");
  check(party_b, dim_b, "b");
}

ComplexMatrix build_operator(MeasurementKind kind, int dim, const std::vector<double>& levels) {
  if (dim != 2 && dim != 3) throw BadArity("measurement operators exist for dims 2 and 3 only");
  if (levels.size() != static_cast<std::size_t>(dim - 1)) {
    throw BadArity("expected " + std::to_string(dim - 1) + " strengths, got " +
                   std::to_string(levels.size()));
  }
  for (double s : levels) {
    if (!(s >= 0.0 && s <= 1.0)) throw BadStrength("strength " + std::to_string(s) + " outside [0, 1]");
  }

  Eigen::VectorXd diag(dim);
  if (kind == MeasurementKind::weak) {
    diag(0) = 1.0;
    for (int l = 1; l < dim; ++l) diag(l) = std::sqrt(1.0 - levels[static_cast<std::size_t>(l - 1)]);
  } else if (dim == 2) {
    diag << std::sqrt(1.0 - levels[0]), 1.0;
  } else {
    diag << std::sqrt((1.0 - levels[0]) * (1.0 - levels[1])), std::sqrt(1.0 - levels[0]),
        std::sqrt(1.0 - levels[1]);
  }
  return diag.cast<Complex>().asDiagonal();
}

PostSelected apply_local_pair(const DensityMatrix& rho, const ComplexMatrix& op_a,
                              const ComplexMatrix& op_b) {
  if (rho.parties() != 2) throw DimMismatch("local pair needs a bipartite state");
  if (op_a.cols() != rho.dims()[0] || op_b.cols() != rho.dims()[1] || op_a.rows() != op_a.cols() ||
      op_b.rows() != op_b.cols()) {
    throw DimMismatch("local operator dimensions do not match the state");
  }
  const ComplexMatrix op = kron(op_a, op_b);
  ComplexMatrix sigma = op * rho.matrix() * op.adjoint();
  const double p = sigma.trace().real();
  if (!(p >= kDegenerateTrace)) {
    throw DegenerateOutcome("post-selection probability " + std::to_string(p) + " below 1e-14");
  }
  sigma /= p;
  sigma = (0.5 * (sigma + sigma.adjoint())).eval();
  return {DensityMatrix::unchecked(rho.dims(), std::move(sigma)), p};
}

}  // namespace unruhlab
