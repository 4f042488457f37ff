#pragma once

// Closed-form final states of the weak -> accelerate -> reverse protocol.
//
// The `paper_*` functions reproduce the published coefficient formulas as
// printed, including their omissions, so they can be audited against the
// channel-composition pipeline. `corrected_final_qubit` is the closed form
// that the pipeline actually produces.

#include <array>

#include "unruhlab/local_ops.hpp"
#include "unruhlab/states.hpp"
#include "unruhlab/unruh_channel.hpp"

namespace unruhlab {

// Weights of |00><00|, |00><11|, |01><01|, |01><10|, |10><10|, |10><01|,
// |11><11|, |11><00| (b_tilde[0] .. b_tilde[7]) and the normalization.
struct QubitCoefficients {
  std::array<double, 8> b_tilde{};
  double normalization = 0;
};

// Qutrit final-state coefficients. d[0..10] weight, in order,
// |00><00| |00><11| |10><10| |11><00| |11><11| |20><20| |22><00| |22><11|
// |22><22| |00><22| |11><22|. r_weights(i, j) = reverse factor of
// Alice level i times Bob level j.
struct QutritCoefficients {
  std::array<double, 11> d{};
  std::array<double, 9> a{};
  Eigen::Matrix3d r_weights = Eigen::Matrix3d::Zero();
  double normalization = 0;
};

// How a literal qubit state is normalized: by the printed factor
// (which sums the |10><01| weight in place of |11><11|) or by its trace.
enum class PaperNormalization { printed, trace };

struct ClosedFormState {
  ComplexMatrix unnormalized;
  double normalization = 0;  // the divisor applied to `unnormalized`
  double printed_normalization = 0;
  DensityMatrix state;  // unnormalized / normalization; trace may differ from 1
  bool paper_literal = false;
};

QubitCoefficients paper_qubit_coefficients(const XStateSpec& spec, const MeasurementStrengths& weak,
                                           const MeasurementStrengths& reverse,
                                           const AccelerationSpec& acc);
QubitCoefficients corrected_qubit_coefficients(const XStateSpec& spec,
                                               const MeasurementStrengths& weak,
                                               const MeasurementStrengths& reverse,
                                               const AccelerationSpec& acc);
ComplexMatrix assemble_qubit(const QubitCoefficients& coeffs);

ClosedFormState paper_final_qubit(const XStateSpec& spec, const MeasurementStrengths& weak,
                                  const MeasurementStrengths& reverse, const AccelerationSpec& acc,
                                  PaperNormalization normalization = PaperNormalization::printed);
ClosedFormState corrected_final_qubit(const XStateSpec& spec, const MeasurementStrengths& weak,
                                      const MeasurementStrengths& reverse,
                                      const AccelerationSpec& acc);

QutritCoefficients paper_qutrit_coefficients(const QutritStateSpec& spec,
                                             const MeasurementStrengths& weak,
                                             const MeasurementStrengths& reverse,
                                             const AccelerationSpec& acc);
ComplexMatrix assemble_qutrit(const QutritCoefficients& coeffs);

ClosedFormState paper_final_qutrit(const QutritStateSpec& spec, const MeasurementStrengths& weak,
                                   const MeasurementStrengths& reverse, const AccelerationSpec& acc);

struct XSpectrum {
  std::array<double, 4> mu{};
  bool negative_discriminant = false;
};

// Closed-form eigenvalues of the X-shaped state built from `coeffs`,
// divided by coeffs.normalization.
XSpectrum x_state_spectrum(const QubitCoefficients& coeffs);

struct DiscrepancyReport {
  double max_abs_diff = 0;
  Eigen::Index max_row = 0;
  Eigen::Index max_col = 0;
  ComplexMatrix diff;  // paper - pipeline
  double paper_trace = 0;
  double pipeline_trace = 0;
  double trace_deficit = 0;  // paper_trace - pipeline_trace
};

// Throws DimMismatch when the matrices differ in size; never throws on
// a numeric mismatch.
DiscrepancyReport discrepancy_report(const DensityMatrix& paper_state,
                                     const DensityMatrix& pipeline_state);

// Basis label such as "|11><11|" or "|P2><02|" for an entry of a state with these dims.
std::string entry_label(const Dims& dims, Eigen::Index row, Eigen::Index col);

}  // namespace unruhlab
