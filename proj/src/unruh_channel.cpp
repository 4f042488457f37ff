#include "unruhlab/unruh_channel.hpp"

#include <string>

namespace unruhlab {

void AccelerationSpec::validate() const {
  if (!(r >= 0.0 && r <= kMaxRindler + 1e-12)) {
    throw BadPhysicalParam("Rindler parameter r=" + std::to_string(r) + " outside [0, pi/4]");
  }
  if (!std::isfinite(phi)) throw BadPhysicalParam("phase phi must be finite");
}

double ChannelKraus::completeness_error() const {
  ComplexMatrix sum = ComplexMatrix::Zero(in_dim, in_dim);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff();
}

double r_from_acceleration(double acceleration, double omega, double c) {
  if (!(acceleration > 0.0) || !(omega > 0.0) || !(c > 0.0)) {
    throw BadPhysicalParam("acceleration, frequency and light speed must be positive");
  }
  return std::atan(std::exp(-std::numbers::pi * omega * c / acceleration));
}

namespace {

// Splits an isometry V : C^in -> C^out (x) C^env into its Kraus operators.
ChannelKraus kraus_from_isometry(const ComplexMatrix& v, int in_dim, int out_dim, int env_dim) {
  ChannelKraus ch{in_dim, out_dim, {}};
  for (int k = 0; k < env_dim; ++k) {
    ComplexMatrix op(out_dim, in_dim);
    for (int i = 0; i < out_dim; ++i) op.row(i) = v.row(i * env_dim + k);
    ch.kraus.push_back(std::move(op));
  }
  return ch;
}

}  // namespace

ComplexMatrix qubit_isometry(const AccelerationSpec& spec) {
  spec.validate();
  const double c = std::cos(spec.r);
  const double s = std::sin(spec.r);
  ComplexMatrix v = ComplexMatrix::Zero(4, 2);
  v(0 * 2 + 0, 0) = c;  // |0>_I |0>_II
  v(1 * 2 + 1, 0) = s;  // |1>_I |1>_II
  v(1 * 2 + 0, 1) = 1;  // |1>_I |0>_II
  return v;
}

ComplexMatrix qutrit_isometry(const AccelerationSpec& spec) {
  spec.validate();
  const double c = std::cos(spec.r);
  const double s = std::sin(spec.r);
  const Complex e = std::polar(1.0, spec.phi);
  constexpr int env = 4;
  auto at = [](int region_one, int region_two) { return region_one * env + region_two; };

  ComplexMatrix v = ComplexMatrix::Zero(16, 3);
  v(at(kVacuum, kVacuum), kVacuum) = c * c;
  v(at(kSpinUp, kSpinDown), kVacuum) = e * s * c;
  v(at(kSpinDown, kSpinUp), kVacuum) = e * s * c;
  v(at(kSpinDown, kPair), kVacuum) = e * e * s * s;

  v(at(kSpinUp, kVacuum), kSpinUp) = c;
  v(at(kPair, kSpinUp), kSpinUp) = e * s;

  v(at(kSpinDown, kVacuum), kSpinDown) = c;
  v(at(kPair, kSpinDown), kSpinDown) = -e * s;
  return v;
}

ChannelKraus qubit_channel(const AccelerationSpec& spec) {
  return kraus_from_isometry(qubit_isometry(spec), 2, 2, 2);
}

ChannelKraus qutrit_channel(const AccelerationSpec& spec) {
  return kraus_from_isometry(qutrit_isometry(spec), 3, 4, 4);
}

DensityMatrix accelerate(const DensityMatrix& rho, int party, const ChannelKraus& channel) {
  if (party < 0 || static_cast<std::size_t>(party) >= rho.parties()) {
    throw InvalidSubsystem("accelerated party index out of range");
  }
  const auto p = static_cast<std::size_t>(party);
  if (rho.dims()[p] != channel.in_dim) {
    throw DimMismatch("channel input dimension " + std::to_string(channel.in_dim) +
                      " does not match subsystem dimension " + std::to_string(rho.dims()[p]));
  }

  Dims out_dims = rho.dims();
  out_dims[p] = channel.out_dim;
  std::size_t left = 1;
  std::size_t right = 1;
  for (std::size_t k = 0; k < p; ++k) left *= static_cast<std::size_t>(rho.dims()[k]);
  for (std::size_t k = p + 1; k < rho.dims().size(); ++k) right *= static_cast<std::size_t>(rho.dims()[k]);
  const auto id_left = ComplexMatrix::Identity(static_cast<Eigen::Index>(left), static_cast<Eigen::Index>(left));
  const auto id_right = ComplexMatrix::Identity(static_cast<Eigen::Index>(right), static_cast<Eigen::Index>(right));

  const Eigen::Index n_out = static_cast<Eigen::Index>(left * right) * channel.out_dim;
  ComplexMatrix out = ComplexMatrix::Zero(n_out, n_out);
  for (const auto& k : channel.kraus) {
    const ComplexMatrix full = kron(kron(id_left, k), id_right);
    out.noalias() += full * rho.matrix() * full.adjoint();
  }
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix::unchecked(std::move(out_dims), std::move(out));
}

}  // namespace unruhlab
