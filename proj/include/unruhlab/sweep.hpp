#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "unruhlab/config.hpp"
#include "unruhlab/measures.hpp"
#include "unruhlab/pipeline.hpp"

namespace unruhlab {

struct SweepResultRow {
  std::vector<int> indices;  // state, r, then one per strength axis of the tie policy
  std::string state;
  double r = 0;
  double alpha_a = 0;
  double alpha_b = 0;
  double beta_a = 0;
  double beta_b = 0;
  std::optional<MeasuresReport> measures;  // empty for degenerate post-selection
};

// One grid point: runs the protocol and evaluates every measure. Returns an
// empty report when post-selection is degenerate.
std::optional<MeasuresReport> evaluate_point(const DensityMatrix& initial, const ProtocolParams& params,
                                             CompareSector sector = CompareSector::full_4dim);

// Rows in lexicographic grid order, independent of config.threads.
std::vector<SweepResultRow> run_sweep(const SweepConfig& config);

// Names of the index columns for the config's tie policy.
std::vector<std::string> index_column_names(const SweepConfig& config);

void write_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepResultRow>& rows);

// "%.17g"
std::string format_number(double value);

// ---------------------------------------------------------------------------
// Figure presets

enum class PlotKind { surface, lines };

struct FigurePreset {
  std::string name;
  std::string title;
  SweepConfig config;
  PlotKind plot = PlotKind::surface;
  std::vector<std::string> plotted;  // measure columns drawn by the plot script
};

const std::vector<std::string>& figure_names();

// Throws UnknownPreset.
FigurePreset figure_preset(const std::string& name);

// Python/matplotlib script that draws the preset from `csv_file`.
std::string plot_script(const FigurePreset& preset, const std::string& csv_file);

}  // namespace unruhlab
