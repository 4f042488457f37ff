// unruhlab: weak measurement -> Unruh acceleration -> reverse measurement sweeps.
//
// Exit codes: 0 success, 1 validation failure, 2 configuration or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "unruhlab/sweep.hpp"
#include "unruhlab/validate.hpp"

namespace fs = std::filesystem;
using namespace unruhlab;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(0, path.string(), "cannot write output file");
  out << text;
}

int cmd_sweep(const std::string& config_path, const std::optional<std::string>& out_path,
              const std::vector<std::string>& overrides, std::optional<int> threads) {
  SweepConfig config = parse_config_file(config_path);
  for (const auto& o : overrides) apply_override(config, o);
  if (threads) apply_override(config, "sweep.threads=" + std::to_string(*threads));

  const auto rows = run_sweep(config);
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw ConfigError(0, *out_path, "cannot write output file");
    write_csv(out, config, rows);
  } else {
    write_csv(std::cout, config, rows);
  }
  return 0;
}

int cmd_figure(const std::string& name, const std::string& out_dir, std::optional<int> threads) {
  FigurePreset preset = figure_preset(name);
  if (threads) preset.config.threads = *threads;
  fs::create_directories(out_dir);

  const auto rows = run_sweep(preset.config);
  const std::string csv_name = preset.name + ".csv";
  {
    std::ofstream out(fs::path(out_dir) / csv_name, std::ios::binary);
    if (!out) throw ConfigError(0, out_dir, "cannot write output file");
    write_csv(out, preset.config, rows);
  }
  SweepConfig recorded = preset.config;
  recorded.threads = 1;
  write_file(fs::path(out_dir) / (preset.name + ".cfg"), format_config(recorded));
  write_file(fs::path(out_dir) / (preset.name + "_plot.py"), plot_script(preset, csv_name));

  std::size_t degenerate = 0;
  for (const auto& r : rows) degenerate += r.measures ? 0 : 1;
  std::cout << preset.name << ": " << rows.size() << " rows (" << degenerate << " degenerate) -> "
            << (fs::path(out_dir) / csv_name).string() << "\n";
  return 0;
}

int cmd_validate(const std::optional<std::string>& out_dir) {
  const ValidationResult result = run_validation();
  std::cout << result.text();
  if (out_dir) {
    fs::create_directories(*out_dir);
    write_file(fs::path(*out_dir) / "validation_report.txt", result.text());
    write_file(fs::path(*out_dir) / "validation_report.csv", result.csv());
  }
  return result.passed() ? 0 : kExitValidation;
}

struct StateArgs {
  std::string system;
  std::string preset;
  std::optional<double> r;
  std::optional<double> accel;
  std::optional<double> omega;
  double alpha = 0;
  double beta = 0;
  double phi = 0;
};

int cmd_state(const StateArgs& a) {
  const SystemKind system = a.system == "two_qubit" ? SystemKind::two_qubit : SystemKind::two_qutrit;
  const StatePreset preset = parse_state_preset(a.preset);
  if (preset.system() != system) {
    throw ConfigError(0, "--preset", "state '" + a.preset + "' does not belong to " + a.system);
  }
  double r = 0;
  if (a.r) {
    r = *a.r;
  } else if (a.accel && a.omega) {
    r = r_from_acceleration(*a.accel, *a.omega);
  } else if (a.accel || a.omega) {
    throw ConfigError(0, "--accel", "--accel and --omega must be given together");
  }

  const int dim = system == SystemKind::two_qubit ? 2 : 3;
  const ProtocolParams params{MeasurementStrengths::tied(MeasurementKind::weak, dim, a.alpha),
                              MeasurementStrengths::tied(MeasurementKind::reverse, dim, a.beta),
                              AccelerationSpec{r, a.phi}};
  const ProtocolResult result = run_protocol(preset.build(), params);
  const auto& m = result.final_state.matrix();

  std::cout << "# dims";
  for (int d : result.final_state.dims()) std::cout << ' ' << d;
  std::cout << "; r " << format_number(r) << "; p_success " << format_number(result.success_probability())
            << "\nrow,col,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::cout << i << ',' << j << ',' << format_number(m(i, j).real()) << ','
                << format_number(m(i, j).imag()) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak/reverse measurement protection of accelerated two-qubit and two-qutrit states"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_path;
  std::vector<std::string> overrides;
  std::optional<int> threads;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a config file and emit CSV");
  sweep->add_option("--config", config_path, "Sweep config file")->required();
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");
  sweep->add_option("--set", overrides, "Override a config key: section.key=value");
  sweep->add_option("--threads", threads, "Worker threads (output is identical for any count)");

  std::string figure_name;
  std::string figure_dir = ".";
  auto* figure = app.add_subcommand("figure", "Run a figure preset and write CSV, config and plot script");
  figure->add_option("preset", figure_name, "Preset name")->required()->check(CLI::IsMember(figure_names()));
  figure->add_option("--out-dir", figure_dir, "Output directory");
  figure->add_option("--threads", threads, "Worker threads");

  std::optional<std::string> validate_dir;
  auto* validate = app.add_subcommand("validate", "Compare closed-form final states against the pipeline");
  validate->add_option("--out-dir", validate_dir, "Directory for validation_report.{txt,csv}");

  StateArgs state_args;
  auto* state = app.add_subcommand("state", "Print the final density matrix as CSV");
  state->add_option("--system", state_args.system, "two_qubit or two_qutrit")
      ->required()
      ->check(CLI::IsMember({"two_qubit", "two_qutrit"}));
  state->add_option("--preset", state_args.preset, "singlet, werner:<x>, x:<c11>,<c22>,<c33>, qutrit:<gamma>")
      ->required();
  auto* r_opt = state->add_option("--r", state_args.r, "Rindler parameter in [0, pi/4]");
  auto* accel_opt = state->add_option("--accel", state_args.accel, "Proper acceleration (c = 1)");
  state->add_option("--omega", state_args.omega, "Mode frequency (c = 1)");
  r_opt->excludes(accel_opt);
  state->add_option("--alpha", state_args.alpha, "Weak measurement strength (all levels, both parties)");
  state->add_option("--beta", state_args.beta, "Reverse measurement strength (all levels, both parties)");
  state->add_option("--phi", state_args.phi, "Mode phase");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*sweep) return cmd_sweep(config_path, out_path, overrides, threads);
    if (*figure) return cmd_figure(figure_name, figure_dir, threads);
    if (*validate) return cmd_validate(validate_dir);
    if (*state) return cmd_state(state_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
