#include "unruhlab/closed_form.hpp"

namespace unruhlab {

namespace {

struct QubitInputs {
  XStateWeights w;
  double alpha_a, alpha_b, beta_a, beta_b;
  double c, s;
};

QubitInputs qubit_inputs(const XStateSpec& spec, const MeasurementStrengths& weak,
                         const MeasurementStrengths& reverse, const AccelerationSpec& acc) {
  weak.validate(2, 2);
  reverse.validate(2, 2);
  acc.validate();
  return {x_state_weights(spec), weak.party_a[0], weak.party_b[0], reverse.party_a[0],
          reverse.party_b[0], std::cos(acc.r), std::sin(acc.r)};
}

ClosedFormState finish(ComplexMatrix unnormalized, double normalization, double printed, Dims dims,
                       bool literal) {
  if (!(normalization > kDegenerateTrace)) {
    throw DegenerateOutcome("closed-form normalization " + std::to_string(normalization) +
                            " is not positive");
  }
  ComplexMatrix normalized = unnormalized / normalization;
  return {std::move(unnormalized), normalization, printed,
          DensityMatrix::unchecked(std::move(dims), std::move(normalized)), literal};
}

}  // namespace

QubitCoefficients paper_qubit_coefficients(const XStateSpec& spec, const MeasurementStrengths& weak,
                                           const MeasurementStrengths& reverse,
                                           const AccelerationSpec& acc) {
  const auto in = qubit_inputs(spec, weak, reverse, acc);
  const auto& w = in.w;
  const double coherence = std::sqrt((1 - in.beta_a) * (1 - in.beta_b) * (1 - in.alpha_a) * (1 - in.alpha_b));

  QubitCoefficients k;
  auto& b = k.b_tilde;
  b[0] = in.c * in.c * w.b1 * (1 - in.beta_a) * (1 - in.beta_b);
  b[1] = in.c * w.b2 * coherence;
  b[2] = in.c * in.c * w.b3 * (1 - in.beta_a) * (1 - in.alpha_b);
  b[3] = in.c * w.b4 * coherence;
  b[4] = (1 - in.beta_b) * (in.s * in.s * w.b1 + (1 - in.alpha_a) * w.b3);
  b[5] = b[3];
  b[6] = (1 - in.alpha_a) * (1 - in.alpha_b) * w.b1;
  b[7] = b[1];
  // As printed: the sum runs over an off-diagonal weight instead of |11><11|.
  k.normalization = b[0] + b[2] + b[4] + b[5];
  return k;
}

QubitCoefficients corrected_qubit_coefficients(const XStateSpec& spec,
                                               const MeasurementStrengths& weak,
                                               const MeasurementStrengths& reverse,
                                               const AccelerationSpec& acc) {
  QubitCoefficients k = paper_qubit_coefficients(spec, weak, reverse, acc);
  const auto in = qubit_inputs(spec, weak, reverse, acc);
  // |01> population of the weak-measured state also flows into |11>.
  k.b_tilde[6] += in.s * in.s * (1 - in.alpha_b) * in.w.b3;
  k.normalization = k.b_tilde[0] + k.b_tilde[2] + k.b_tilde[4] + k.b_tilde[6];
  return k;
}

ComplexMatrix assemble_qubit(const QubitCoefficients& coeffs) {
  const auto& b = coeffs.b_tilde;
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = b[0];
  m(0, 3) = b[1];
  m(1, 1) = b[2];
  m(1, 2) = b[3];
  m(2, 2) = b[4];
  m(2, 1) = b[5];
  m(3, 3) = b[6];
  m(3, 0) = b[7];
  return m;
}

ClosedFormState paper_final_qubit(const XStateSpec& spec, const MeasurementStrengths& weak,
                                  const MeasurementStrengths& reverse, const AccelerationSpec& acc,
                                  PaperNormalization normalization) {
  const auto k = paper_qubit_coefficients(spec, weak, reverse, acc);
  ComplexMatrix m = assemble_qubit(k);
  const double divisor = normalization == PaperNormalization::printed ? k.normalization : m.trace().real();
  return finish(std::move(m), divisor, k.normalization, {2, 2}, true);
}

ClosedFormState corrected_final_qubit(const XStateSpec& spec, const MeasurementStrengths& weak,
                                      const MeasurementStrengths& reverse,
                                      const AccelerationSpec& acc) {
  const auto k = corrected_qubit_coefficients(spec, weak, reverse, acc);
  return finish(assemble_qubit(k), k.normalization, k.normalization, {2, 2}, false);
}

QutritCoefficients paper_qutrit_coefficients(const QutritStateSpec& spec,
                                             const MeasurementStrengths& weak,
                                             const MeasurementStrengths& reverse,
                                             const AccelerationSpec& acc) {
  weak.validate(3, 3);
  reverse.validate(3, 3);
  acc.validate();
  if (!(spec.gamma >= 0.0)) throw InvalidState("gamma must be nonnegative");

  const double g = spec.gamma;
  const double norm = 2 + g * g;
  const double c = std::cos(acc.r);
  const double s = std::sin(acc.r);
  // One weak strength per party enters the printed block (level 1 of each).
  const double a1 = weak.party_a[0];
  const double a2 = weak.party_b[0];
  const double root = std::sqrt(1 - a1) * std::sqrt(1 - a2);

  QutritCoefficients k;
  auto& A = k.a;
  A[0] = 1 / norm;
  A[1] = root / norm;
  A[2] = g * root / norm;
  A[3] = A[1];
  A[4] = norm * A[1] * A[1];
  A[5] = g * A[1] * root;
  A[6] = g / norm * root;
  A[7] = g * (1 - a1) / norm * std::sqrt(1 - a2) * std::sqrt(1 - a2);
  A[8] = g * g / norm * (1 - a1) * (1 - a2);

  auto reverse_factor = [](const std::vector<double>& b, int level) {
    switch (level) {
      case 0: return std::sqrt((1 - b[0]) * (1 - b[1]));
      case 1: return std::sqrt(1 - b[0]);
      default: return std::sqrt(1 - b[1]);
    }
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      k.r_weights(i, j) = reverse_factor(reverse.party_a, i) * reverse_factor(reverse.party_b, j);
    }
  }
  const auto& R = k.r_weights;
  const double c2 = c * c;
  const double c3 = c2 * c;

  auto& D = k.d;
  D[0] = c2 * R(0, 0) * R(0, 0) * A[0];
  D[1] = c3 * R(0, 0) * R(1, 1) * A[1];
  D[2] = c2 * s * s * R(1, 0) * R(1, 0) * A[0];
  D[3] = c3 * R(0, 0) * R(1, 1) * A[3];
  D[4] = c3 * R(1, 1) * R(1, 1) * A[4];
  D[5] = c2 * s * s * R(2, 0) * R(2, 0) * A[0];
  D[6] = c3 * R(2, 2) * R(0, 0) * A[6];
  D[7] = c2 * R(2, 2) * R(1, 1) * A[7];
  D[8] = c2 * R(2, 2) * R(2, 2) * A[8];
  // The unsubscripted cosine in the last two weights is taken as cos r.
  D[9] = R(0, 0) * R(2, 2) * A[2] * c3;
  D[10] = R(1, 1) * R(2, 2) * A[5] * c2;

  k.normalization = D[0] + D[2] + D[4] + D[5] + D[8];
  return k;
}

ComplexMatrix assemble_qutrit(const QutritCoefficients& coeffs) {
  auto idx = [](int a, int b) { return a * 3 + b; };
  const auto& D = coeffs.d;
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  m(idx(0, 0), idx(0, 0)) = D[0];
  m(idx(0, 0), idx(1, 1)) = D[1];
  m(idx(1, 0), idx(1, 0)) = D[2];
  m(idx(1, 1), idx(0, 0)) = D[3];
  m(idx(1, 1), idx(1, 1)) = D[4];
  m(idx(2, 0), idx(2, 0)) = D[5];
  m(idx(2, 2), idx(0, 0)) = D[6];
  m(idx(2, 2), idx(1, 1)) = D[7];
  m(idx(2, 2), idx(2, 2)) = D[8];
  m(idx(0, 0), idx(2, 2)) = D[9];
  m(idx(1, 1), idx(2, 2)) = D[10];
  return m;
}

ClosedFormState paper_final_qutrit(const QutritStateSpec& spec, const MeasurementStrengths& weak,
                                   const MeasurementStrengths& reverse, const AccelerationSpec& acc) {
  const auto k = paper_qutrit_coefficients(spec, weak, reverse, acc);
  return finish(assemble_qutrit(k), k.normalization, k.normalization, {3, 3}, true);
}

XSpectrum x_state_spectrum(const QubitCoefficients& coeffs) {
  const auto& b = coeffs.b_tilde;
  const double n2 = 2 * coeffs.normalization;
  const double disc_outer = (b[0] - b[6]) * (b[0] - b[6]) + 4 * b[1] * b[7];
  const double disc_inner = (b[2] - b[4]) * (b[2] - b[4]) + 4 * b[3] * b[5];

  XSpectrum out;
  out.negative_discriminant = disc_outer < 0 || disc_inner < 0;
  const double root_outer = std::sqrt(std::max(disc_outer, 0.0));
  const double root_inner = std::sqrt(std::max(disc_inner, 0.0));
  out.mu = {(b[0] + b[6] + root_outer) / n2, (b[0] + b[6] - root_outer) / n2,
            (b[2] + b[4] + root_inner) / n2, (b[2] + b[4] - root_inner) / n2};
  return out;
}

DiscrepancyReport discrepancy_report(const DensityMatrix& paper_state,
                                     const DensityMatrix& pipeline_state) {
  const auto& p = paper_state.matrix();
  const auto& q = pipeline_state.matrix();
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw DimMismatch("discrepancy report needs states of equal dimension");
  }
  DiscrepancyReport r;
  r.diff = p - q;
  r.max_abs_diff = r.diff.size() == 0 ? 0.0 : r.diff.cwiseAbs().maxCoeff(&r.max_row, &r.max_col);
  r.paper_trace = p.trace().real();
  r.pipeline_trace = q.trace().real();
  r.trace_deficit = r.paper_trace - r.pipeline_trace;
  return r;
}

std::string entry_label(const Dims& dims, Eigen::Index row, Eigen::Index col) {
  auto ket = [&](Eigen::Index index) {
    std::string digits(dims.size(), '0');
    auto rest = static_cast<std::size_t>(index);
    for (std::size_t k = dims.size(); k-- > 0;) {
      const auto d = static_cast<std::size_t>(dims[k]);
      const std::size_t digit = rest % d;
      rest /= d;
      digits[k] = (d == 4 && digit == kPair) ? 'P' : static_cast<char>('0' + digit);
    }
    return digits;
  };
  return "|" + ket(row) + "><" + ket(col) + "|";
}

}  // namespace unruhlab
