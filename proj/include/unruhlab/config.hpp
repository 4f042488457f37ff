#pragma once

// Sweep configuration and its text format.
//
//   # comment
//   [sweep]
//   system = two_qubit                 # or two_qutrit
//   initial_state = singlet; werner:0.7
//   tie_policy = all_equal             # weak_reverse_split | independent
//   phi = 0
//   measures = E_norm, I_a, I_b        # default: every measure
//   normalization_mode = normalized    # raw
//   qutrit_compare_sector = full_4dim  # projected_3dim
//   threads = 1
//
//   [grid]
//   r = 0 : pi/4 : 80                  # start : stop : steps
//   strength = 0.5, 0.8, 0.9           # explicit list
//
// Grid keys: `r`, `strength` (all tie policies), `reverse` (split policy,
// defaults to `strength`), `weak_a`, `weak_b`, `reverse_a`, `reverse_b`
// (independent policy, each defaults to `strength`). Numbers accept `pi`,
// `pi/<n>` and `<n>*pi`.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unruhlab/states.hpp"

namespace unruhlab {

enum class TiePolicy { all_equal, weak_reverse_split, independent };
enum class NormalizationMode { raw, normalized };
enum class CompareSector { full_4dim, projected_3dim };

struct Grid {
  std::vector<double> values;

  static Grid linspace(double start, double stop, int steps);
  static Grid list(std::vector<double> values) { return {std::move(values)}; }
  static Grid single(double value) { return {{value}}; }
};

struct SweepConfig {
  SystemKind system = SystemKind::two_qubit;
  std::vector<std::string> initial_states{"singlet"};
  Grid r_grid = Grid::single(0.0);
  Grid strength_grid = Grid::single(0.0);
  std::optional<Grid> reverse_grid;
  std::optional<Grid> weak_a_grid;
  std::optional<Grid> weak_b_grid;
  std::optional<Grid> reverse_a_grid;
  std::optional<Grid> reverse_b_grid;
  TiePolicy tie_policy = TiePolicy::all_equal;
  double phi = 0;
  std::vector<std::string> measures;  // empty means all
  NormalizationMode normalization_mode = NormalizationMode::normalized;
  CompareSector qutrit_compare_sector = CompareSector::full_4dim;
  int threads = 1;

  // Throws ConfigError.
  void validate() const;
  // Requested measure names with `E` resolved and `p_success` appended.
  std::vector<std::string> resolved_measures() const;
};

// Every measure name accepted in `measures`, in canonical column order.
const std::vector<std::string>& all_measure_names();

SweepConfig parse_config(std::istream& in);
SweepConfig parse_config_file(const std::string& path);

// Applies one `section.key=value` override (section optional).
void apply_override(SweepConfig& config, std::string_view assignment);

// Parses a number with the `pi` shorthands. Throws ConfigError.
double parse_config_number(std::string_view text, int line = 0, std::string_view field = {});

std::string_view to_string(TiePolicy policy);
std::string_view to_string(NormalizationMode mode);
std::string_view to_string(CompareSector sector);

// Renders a config back to the text format (round-trips through parse_config).
std::string format_config(const SweepConfig& config);

}  // namespace unruhlab
