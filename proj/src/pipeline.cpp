#include "unruhlab/pipeline.hpp"

namespace unruhlab {

ProtocolParams ProtocolParams::tied(SystemKind system, double r, double strength, double phi) {
  const int dim = system == SystemKind::two_qubit ? 2 : 3;
  return {MeasurementStrengths::tied(MeasurementKind::weak, dim, strength),
          MeasurementStrengths::tied(MeasurementKind::reverse, dim, strength),
          AccelerationSpec{r, phi}};
}

ComplexMatrix reverse_operator_region_one(const std::vector<double>& levels) {
  ComplexMatrix op = ComplexMatrix::Identity(4, 4);
  op.topLeftCorner(3, 3) = build_operator(MeasurementKind::reverse, 3, levels);
  return op;
}

ProtocolResult run_protocol(const DensityMatrix& initial, const ProtocolParams& params) {
  if (initial.parties() != 2) throw DimMismatch("protocol needs a bipartite state");
  const int dim_a = initial.dims()[0];
  const int dim_b = initial.dims()[1];
  if (dim_a != dim_b || (dim_a != 2 && dim_a != 3)) {
    throw DimMismatch("protocol runs on two qubits or two qutrits");
  }
  params.weak.validate(dim_a, dim_b);
  params.reverse.validate(dim_a, dim_b);
  params.acceleration.validate();

  const bool qubit = dim_a == 2;
  auto weak = apply_local_pair(initial, build_operator(MeasurementKind::weak, dim_a, params.weak.party_a),
                               build_operator(MeasurementKind::weak, dim_b, params.weak.party_b));

  const ChannelKraus channel =
      qubit ? qubit_channel(params.acceleration) : qutrit_channel(params.acceleration);
  DensityMatrix accelerated = accelerate(weak.state, 0, channel);

  const ComplexMatrix reverse_a = qubit
                                      ? build_operator(MeasurementKind::reverse, 2, params.reverse.party_a)
                                      : reverse_operator_region_one(params.reverse.party_a);
  auto reverse = apply_local_pair(accelerated, reverse_a,
                                  build_operator(MeasurementKind::reverse, dim_b, params.reverse.party_b));

  return {std::move(weak.state), std::move(accelerated), std::move(reverse.state),
          weak.success_probability, reverse.success_probability};
}

DensityMatrix restrict_to_qutrit_sector(const DensityMatrix& rho, bool renormalize) {
  if (rho.parties() != 2 || rho.dims()[0] != 4) {
    throw DimMismatch("sector restriction expects a 4 (x) d accelerated-qutrit state");
  }
  const Eigen::Index n = 3 * rho.dims()[1];
  ComplexMatrix sector = rho.matrix().topLeftCorner(n, n);
  if (renormalize) {
    const double w = sector.trace().real();
    if (!(w >= kDegenerateTrace)) throw DegenerateOutcome("qutrit sector carries no weight");
    sector /= w;
  }
  return DensityMatrix::unchecked({3, rho.dims()[1]}, std::move(sector));
}

}  // namespace unruhlab
