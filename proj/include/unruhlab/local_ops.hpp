#pragma once

#include <vector>

#include "unruhlab/tensor.hpp"

namespace unruhlab {

enum class MeasurementKind { weak, reverse };

// One strength per excited level of each party: one for a qubit, two for a
// qutrit. Every strength lies in [0, 1].
struct MeasurementStrengths {
  MeasurementKind kind = MeasurementKind::weak;
  std::vector<double> party_a;
  std::vector<double> party_b;

  // Every level of both parties set to `strength`.
  static MeasurementStrengths tied(MeasurementKind kind, int dim, double strength);
  static MeasurementStrengths per_party(MeasurementKind kind, int dim, double strength_a,
                                        double strength_b);

  // Throws BadStrength / BadArity.
  void validate(int dim_a, int dim_b) const;
};

// Diagonal measurement operator on one party.
//   weak    qubit  diag(1, sqrt(1-a))        qutrit diag(1, sqrt(1-a1), sqrt(1-a2))
//   reverse qubit  diag(sqrt(1-b), 1)        qutrit diag(sqrt((1-b1)(1-b2)), sqrt(1-b1), sqrt(1-b2))
ComplexMatrix build_operator(MeasurementKind kind, int dim, const std::vector<double>& levels);

struct PostSelected {
  DensityMatrix state;
  double success_probability;
};

// sigma = (A (x) B) rho (A (x) B)^H, renormalized. Throws DegenerateOutcome
// when tr(sigma) < 1e-14.
PostSelected apply_local_pair(const DensityMatrix& rho, const ComplexMatrix& op_a,
                              const ComplexMatrix& op_b);

inline constexpr double kDegenerateTrace = 1e-14;

}  // namespace unruhlab
