#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unruhlab/closed_form.hpp"
#include "unruhlab/pipeline.hpp"

namespace unruhlab {

struct ValidationCheck {
  std::string name;
  bool must_pass = false;
  bool passed = true;
  double value = 0;
  double threshold = 0;  // 0 for report-only checks
  std::string detail;
};

struct ValidationResult {
  std::vector<ValidationCheck> checks;

  bool passed() const;
  std::string text() const;
  std::string csv() const;
};

// A pseudorandom qubit protocol instance: valid X-state, independent
// strengths in [0, max_strength], r in [0, pi/4].
struct QubitTuple {
  XStateSpec spec;
  ProtocolParams params;
};

std::vector<QubitTuple> random_qubit_tuples(std::size_t count, std::uint64_t seed,
                                            double max_strength = 0.95);

// Unnormalized pipeline output (final state times success probability),
// the quantity the closed forms describe before normalization.
ComplexMatrix pipeline_unnormalized(const DensityMatrix& initial, const ProtocolParams& params);

// Pipeline against the closed forms.
ValidationResult run_validation(std::size_t tuples = 100, std::uint64_t seed = 20240611);

}  // namespace unruhlab
