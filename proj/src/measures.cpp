#include "unruhlab/measures.hpp"

namespace unruhlab {

namespace {

void require_bipartite(const DensityMatrix& rho) {
  if (rho.parties() != 2) throw DimMismatch("measure defined for bipartite states");
}

}  // namespace

Negativity negativity(const DensityMatrix& rho, int transpose_party) {
  require_bipartite(rho);
  const RealVector lambda = hermitian_eigenvalues(partial_transpose(rho, transpose_party));
  double raw = 0;
  for (double l : lambda) {
    if (l < 0) raw -= l;
  }
  if (raw < 1e-12) raw = 0;  // rounding-level negatives of PPT states
  const int d_min = std::min(rho.dims()[0], rho.dims()[1]);
  return {raw, 2.0 * raw / (d_min - 1)};
}

double local_information(const DensityMatrix& rho, int party) {
  require_bipartite(rho);
  const DensityMatrix marginal = partial_trace(rho, party);
  return shannon_entropy_bits(marginal.matrix().diagonal().real());
}

double coherent_information(const DensityMatrix& rho, CoherentVariant variant) {
  require_bipartite(rho);
  const double joint = von_neumann_entropy(rho);
  if (variant == CoherentVariant::paper_literal) return -joint;
  return von_neumann_entropy(partial_trace(rho, 1)) - joint;
}

MeasuresReport measure_all(const DensityMatrix& rho, double success_probability) {
  require_bipartite(rho);
  MeasuresReport m;
  const Negativity n = negativity(rho, 0);
  m.negativity_raw = n.raw;
  m.entanglement_normalized = n.normalized;
  m.info_accelerated_bits = local_information(rho, 0);
  m.info_inertial_bits = local_information(rho, 1);
  const double joint = von_neumann_entropy(rho);
  m.coherent_info_standard_bits = von_neumann_entropy(partial_trace(rho, 1)) - joint;
  m.coherent_info_paper_bits = -joint;
  m.success_probability = success_probability;
  return m;
}

}  // namespace unruhlab
