#pragma once


#include "unruhlab/tensor.hpp"

namespace unruhlab {

struct Negativity {
  double raw = 0;         // sum of |negative eigenvalues| of the partial transpose
  double normalized = 0;  // (||rho^T||_1 - 1) / (d_min - 1), 1 for a maximally entangled state
};

Negativity negativity(const DensityMatrix& rho, int transpose_party = 0);

// Shannon entropy (bits) of the computational-basis populations of one party's marginal.
double local_information(const DensityMatrix& rho, int party);

enum class CoherentVariant {
  standard,       // S(rho_b) - S(rho_ab)
  paper_literal,  // sum mu log2 mu = -S(rho_ab)
};

double coherent_information(const DensityMatrix& rho, CoherentVariant variant);

// Party 0 is the accelerated one (a), party 1 inertial (b).
struct MeasuresReport {
  double negativity_raw = 0;
  double entanglement_normalized = 0;
  double info_accelerated_bits = 0;
  double info_inertial_bits = 0;
  double coherent_info_standard_bits = 0;
  double coherent_info_paper_bits = 0;
  double success_probability = 1;
};

MeasuresReport measure_all(const DensityMatrix& rho, double success_probability = 1.0);

}  // namespace unruhlab
