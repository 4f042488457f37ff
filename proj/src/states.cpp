#include "unruhlab/states.hpp"

#include <charconv>
#include <vector>

namespace unruhlab {

XStateWeights x_state_weights(const XStateSpec& spec) {
  for (double c : {spec.c11, spec.c22, spec.c33}) {
    if (!std::isfinite(c) || c < -1.0 || c > 1.0) {
      throw InvalidState("X-state correlation coefficients must lie in [-1, 1]");
    }
  }
  // Expanding (I + sum_i c_ii sigma_i (x) sigma_i) / 4: sigma_x sigma_x and
  // sigma_y sigma_y add on |01><10| and cancel on |00><11|.
  XStateWeights w;
  w.b1 = (1.0 + spec.c33) / 4.0;
  w.b2 = (spec.c11 - spec.c22) / 4.0;
  w.b3 = (1.0 - spec.c33) / 4.0;
  w.b4 = (spec.c11 + spec.c22) / 4.0;
  return w;
}

DensityMatrix make_x_state(const XStateSpec& spec) {
  const XStateWeights w = x_state_weights(spec);
  // Spectrum is {b1 +- b2, b3 +- b4}.
  const double min_eig = std::min({w.b1 - std::abs(w.b2), w.b3 - std::abs(w.b4)});
  if (min_eig < -kStateTolerance) {
    throw NotPositive("X-state spec (" + std::to_string(spec.c11) + ", " + std::to_string(spec.c22) +
                      ", " + std::to_string(spec.c33) + ") has eigenvalue " + std::to_string(min_eig));
  }
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = w.b1;
  m(3, 3) = w.b1;
  m(1, 1) = w.b3;
  m(2, 2) = w.b3;
  m(0, 3) = w.b2;
  m(3, 0) = w.b2;
  m(1, 2) = w.b4;
  m(2, 1) = w.b4;
  return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix make_qutrit_state(const QutritStateSpec& spec) {
  if (!std::isfinite(spec.gamma) || spec.gamma < 0.0) {
    throw InvalidState("qutrit superposition weight gamma must be nonnegative");
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(9);
  const double norm = 1.0 / std::sqrt(2.0 + spec.gamma * spec.gamma);
  psi(0) = norm;               // |00>
  psi(4) = norm;               // |11>
  psi(8) = spec.gamma * norm;  // |22>
  return DensityMatrix({3, 3}, psi * psi.adjoint());
}

XStateSpec singlet_spec() { return {-1.0, -1.0, -1.0}; }

XStateSpec werner_spec(double x) { return {-x, -x, -x}; }

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::two_qubit ? "two_qubit" : "two_qutrit";
}

DensityMatrix StatePreset::build() const {
  if (const auto* x = std::get_if<XStateSpec>(&spec)) return make_x_state(*x);
  return make_qutrit_state(std::get<QutritStateSpec>(spec));
}

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UnknownPreset("malformed number in state preset '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

StatePreset parse_state_preset(std::string_view text) {
  const std::string whole(text);
  if (text == "singlet") return {whole, singlet_spec()};

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UnknownPreset("unknown state preset '" + whole + "'");
  const std::string_view head = text.substr(0, colon);
  std::string_view tail = text.substr(colon + 1);

  if (head == "werner") return {whole, werner_spec(parse_number(tail, text))};
  if (head == "qutrit") return {whole, QutritStateSpec{parse_number(tail, text)}};
  if (head == "x") {
    std::vector<double> c;
    while (true) {
      const auto comma = tail.find(',');
      c.push_back(parse_number(tail.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      tail.remove_prefix(comma + 1);
    }
    if (c.size() != 3) throw UnknownPreset("x preset needs three coefficients: '" + whole + "'");
    return {whole, XStateSpec{c[0], c[1], c[2]}};
  }
  throw UnknownPreset("unknown state preset '" + whole + "'");
}

}  // namespace unruhlab
