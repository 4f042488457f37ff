#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "unruhlab/tensor.hpp"

namespace unruhlab {

// Two-qubit X-state with zero Bloch vectors and a diagonal correlation
// dyadic diag(c11, c22, c33).
struct XStateSpec {
  double c11 = 0;
  double c22 = 0;
  double c33 = 0;
};

// Matrix-element weights of the X-state in the computational basis:
//   populations  |00>,|11> -> b1      |01>,|10> -> b3
//   coherences   |00><11|  -> b2      |01><10|  -> b4
struct XStateWeights {
  double b1 = 0;
  double b2 = 0;
  double b3 = 0;
  double b4 = 0;
};

// Two-qutrit pure state (|00> + |11> + gamma |22>) / sqrt(2 + gamma^2).
struct QutritStateSpec {
  double gamma = 1;
};

XStateWeights x_state_weights(const XStateSpec& spec);

DensityMatrix make_x_state(const XStateSpec& spec);
DensityMatrix make_qutrit_state(const QutritStateSpec& spec);

XStateSpec singlet_spec();
XStateSpec werner_spec(double x);

enum class SystemKind { two_qubit, two_qutrit };

std::string_view to_string(SystemKind kind);

// A parsed preset name: `singlet`, `werner:<x>`, `x:<c11>,<c22>,<c33>`, `qutrit:<gamma>`.
struct StatePreset {
  std::string name;
  std::variant<XStateSpec, QutritStateSpec> spec;

  SystemKind system() const {
    return std::holds_alternative<XStateSpec>(spec) ? SystemKind::two_qubit : SystemKind::two_qutrit;
  }
  DensityMatrix build() const;
};

// Throws UnknownPreset for unrecognized names or malformed numbers.
StatePreset parse_state_preset(std::string_view text);

}  // namespace unruhlab
