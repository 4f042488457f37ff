#pragma once

#include "unruhlab/local_ops.hpp"
#include "unruhlab/states.hpp"
#include "unruhlab/unruh_channel.hpp"

namespace unruhlab {

// Weak measurement on both parties, acceleration of party a, reverse
// measurement on both parties.
struct ProtocolParams {
  MeasurementStrengths weak;
  MeasurementStrengths reverse{MeasurementKind::reverse, {}, {}};
  AccelerationSpec acceleration;

  // Every weak and reverse strength equal to `strength`.
  static ProtocolParams tied(SystemKind system, double r, double strength, double phi = 0.0);
};

struct ProtocolResult {
  DensityMatrix after_weak;
  DensityMatrix accelerated;
  DensityMatrix final_state;
  double weak_probability = 1;
  double reverse_probability = 1;

  double success_probability() const { return weak_probability * reverse_probability; }
};

// Reverse operator on the accelerated qutrit's region-I space {0, U, D, P}.
// The pair level is left untouched (entry 1).
ComplexMatrix reverse_operator_region_one(const std::vector<double>& levels);

// Runs the protocol on a two-qubit or two-qutrit state. For qutrits the
// final state lives on 4 (x) 3. Throws DegenerateOutcome when a
// post-selection annihilates the state.
ProtocolResult run_protocol(const DensityMatrix& initial, const ProtocolParams& params);

// Restricts a 4 (x) 3 accelerated-qutrit state to Alice's {0, U, D} sector.
// With renormalize = false the result keeps its sub-unit trace.
DensityMatrix restrict_to_qutrit_sector(const DensityMatrix& rho, bool renormalize);

}  // namespace unruhlab
