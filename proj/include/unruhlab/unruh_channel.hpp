#pragma once

#include <numbers>
#include <vector>

#include "unruhlab/tensor.hpp"

namespace unruhlab {

inline constexpr double kMaxRindler = std::numbers::pi / 4.0;

// Rindler acceleration parameter r in [0, pi/4] and the mode phase phi.
struct AccelerationSpec {
  double r = 0;
  double phi = 0;

  void validate() const;
};

// Operator-sum form of an isometry into region I (x) region II followed by
// the trace over region II: K_k = (I (x) <k|_II) V.
struct ChannelKraus {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<ComplexMatrix> kraus;

  // max |sum K^H K - I|
  double completeness_error() const;
};

// tan r = exp(-pi omega c / a). Throws BadPhysicalParam for nonpositive inputs.
double r_from_acceleration(double acceleration, double omega, double c = 1.0);

// Region-I basis for the accelerated qutrit.
enum RindlerLevel : int { kVacuum = 0, kSpinUp = 1, kSpinDown = 2, kPair = 3 };

// Fermionic qubit: |0> -> cos r |0>|0> + sin r |1>|1>,  |1> -> |1>|0>.
ChannelKraus qubit_channel(const AccelerationSpec& spec);

// Fermionic qutrit (basis 0, U, D) into region I = {0, U, D, P}:
//   |0> -> cos^2 r |0,0> + e^{i phi} sin r cos r (|U,D> + |D,U>) + e^{2 i phi} sin^2 r |D,P>
//   |U> -> cos r |U,0> + e^{i phi} sin r |P,U>
//   |D> -> cos r |D,0> - e^{i phi} sin r |P,D>
ChannelKraus qutrit_channel(const AccelerationSpec& spec);

// The region I (x) region II isometry V (row index i * dim_II + k) behind
// each channel.
ComplexMatrix qubit_isometry(const AccelerationSpec& spec);
ComplexMatrix qutrit_isometry(const AccelerationSpec& spec);

// rho' = sum_k (K_k (x) I) rho (K_k (x) I)^H on subsystem `party`; that
// subsystem's dimension becomes channel.out_dim.
DensityMatrix accelerate(const DensityMatrix& rho, int party, const ChannelKraus& channel);

}  // namespace unruhlab
