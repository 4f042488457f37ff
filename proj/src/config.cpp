#include "unruhlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "unruhlab/unruh_channel.hpp"

namespace unruhlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

double plain_number(std::string_view text, int line, std::string_view field) {
  double value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(line, std::string(field), "malformed number '" + std::string(text) + "'");
  }
  return value;
}

Grid parse_grid(std::string_view text, int line, std::string_view field) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw ConfigError(line, std::string(field), "range grids are written start : stop : steps");
    }
    const double steps = parse_config_number(parts[2], line, field);
    if (steps < 1 || steps != std::floor(steps)) {
      throw ConfigError(line, std::string(field), "grid steps must be a positive integer");
    }
    return Grid::linspace(parse_config_number(parts[0], line, field),
                          parse_config_number(parts[1], line, field), static_cast<int>(steps));
  }
  Grid g;
  for (auto part : split(text, ',')) g.values.push_back(parse_config_number(part, line, field));
  return g;
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const std::pair<std::string_view, Enum> (&options)[N], int line,
                std::string_view field) {
  for (const auto& [name, value] : options) {
    if (text == name) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : options) allowed += (allowed.empty() ? "" : ", ") + std::string(name);
  throw ConfigError(line, std::string(field),
                    "unknown value '" + std::string(text) + "' (expected one of: " + allowed + ")");
}

constexpr std::pair<std::string_view, SystemKind> kSystems[] = {
    {"two_qubit", SystemKind::two_qubit}, {"two_qutrit", SystemKind::two_qutrit}};
constexpr std::pair<std::string_view, TiePolicy> kTies[] = {
    {"all_equal", TiePolicy::all_equal},
    {"weak_reverse_split", TiePolicy::weak_reverse_split},
    {"independent", TiePolicy::independent}};
constexpr std::pair<std::string_view, NormalizationMode> kModes[] = {
    {"raw", NormalizationMode::raw}, {"normalized", NormalizationMode::normalized}};
constexpr std::pair<std::string_view, CompareSector> kSectors[] = {
    {"full_4dim", CompareSector::full_4dim}, {"projected_3dim", CompareSector::projected_3dim}};

void assign(SweepConfig& cfg, std::string_view section, std::string_view key, std::string_view value,
            int line) {
  const std::string field = section.empty() ? std::string(key) : std::string(section) + "." + std::string(key);
  auto in = [&](std::string_view s) { return section.empty() || section == s; };

  if (in("sweep")) {
    if (key == "system") return void(cfg.system = parse_enum(value, kSystems, line, field));
    if (key == "initial_state") {
      cfg.initial_states.clear();
      for (auto part : split(value, ';')) cfg.initial_states.emplace_back(part);
      return;
    }
    if (key == "tie_policy") return void(cfg.tie_policy = parse_enum(value, kTies, line, field));
    if (key == "phi") return void(cfg.phi = parse_config_number(value, line, field));
    if (key == "measures") {
      cfg.measures.clear();
      for (auto part : split(value, ',')) {
        if (!part.empty()) cfg.measures.emplace_back(part);
      }
      return;
    }
    if (key == "normalization_mode") {
      return void(cfg.normalization_mode = parse_enum(value, kModes, line, field));
    }
    if (key == "qutrit_compare_sector") {
      return void(cfg.qutrit_compare_sector = parse_enum(value, kSectors, line, field));
    }
    if (key == "threads") {
      const double t = parse_config_number(value, line, field);
      if (t < 1 || t != std::floor(t)) throw ConfigError(line, field, "threads must be a positive integer");
      return void(cfg.threads = static_cast<int>(t));
    }
  }
  if (in("grid")) {
    if (key == "r") return void(cfg.r_grid = parse_grid(value, line, field));
    if (key == "strength") return void(cfg.strength_grid = parse_grid(value, line, field));
    if (key == "reverse") return void(cfg.reverse_grid = parse_grid(value, line, field));
    if (key == "weak_a") return void(cfg.weak_a_grid = parse_grid(value, line, field));
    if (key == "weak_b") return void(cfg.weak_b_grid = parse_grid(value, line, field));
    if (key == "reverse_a") return void(cfg.reverse_a_grid = parse_grid(value, line, field));
    if (key == "reverse_b") return void(cfg.reverse_b_grid = parse_grid(value, line, field));
  }
  throw ConfigError(line, field, "unknown key");
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_text(const Grid& g) {
  std::string out;
  for (double v : g.values) out += (out.empty() ? "" : ", ") + number(v);
  return out;
}

}  // namespace

Grid Grid::linspace(double start, double stop, int steps) {
  Grid g;
  if (steps == 1) {
    g.values.push_back(start);
    return g;
  }
  for (int i = 0; i < steps; ++i) {
    g.values.push_back(i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1));
  }
  return g;
}

double parse_config_number(std::string_view text, int line, std::string_view field) {
  text = trim(text);
  if (text == "pi") return std::numbers::pi;
  if (text.starts_with("pi/")) return std::numbers::pi / plain_number(text.substr(3), line, field);
  if (text.ends_with("*pi")) return plain_number(text.substr(0, text.size() - 3), line, field) * std::numbers::pi;
  return plain_number(text, line, field);
}

const std::vector<std::string>& all_measure_names() {
  static const std::vector<std::string> names = {"neg_raw", "E_norm", "I_a",      "I_b",
                                                 "I_coh_std", "I_coh_paper", "p_success"};
  return names;
}

std::vector<std::string> SweepConfig::resolved_measures() const {
  std::vector<std::string> out;
  const auto& source = measures.empty() ? all_measure_names() : measures;
  for (const auto& m : source) {
    std::string name = m;
    if (name == "E") name = normalization_mode == NormalizationMode::raw ? "neg_raw" : "E_norm";
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  if (std::find(out.begin(), out.end(), "p_success") == out.end()) out.emplace_back("p_success");
  return out;
}

void SweepConfig::validate() const {
  auto check_grid = [](const Grid& g, const char* field, double lo, double hi) {
    if (g.values.empty()) throw ConfigError(0, field, "grid is empty");
    if (g.values.front() > g.values.back()) throw ConfigError(0, field, "grid start exceeds stop");
    for (double v : g.values) {
      if (!(v >= lo && v <= hi)) {
        throw ConfigError(0, field, "value " + number(v) + " outside [" + number(lo) + ", " + number(hi) + "]");
      }
    }
  };
  check_grid(r_grid, "grid.r", 0.0, kMaxRindler + 1e-12);
  check_grid(strength_grid, "grid.strength", 0.0, 1.0);
  if (reverse_grid) check_grid(*reverse_grid, "grid.reverse", 0.0, 1.0);
  if (weak_a_grid) check_grid(*weak_a_grid, "grid.weak_a", 0.0, 1.0);
  if (weak_b_grid) check_grid(*weak_b_grid, "grid.weak_b", 0.0, 1.0);
  if (reverse_a_grid) check_grid(*reverse_a_grid, "grid.reverse_a", 0.0, 1.0);
  if (reverse_b_grid) check_grid(*reverse_b_grid, "grid.reverse_b", 0.0, 1.0);
  if (!std::isfinite(phi)) throw ConfigError(0, "sweep.phi", "phase must be finite");
  if (threads < 1) throw ConfigError(0, "sweep.threads", "threads must be positive");

  if (initial_states.empty()) throw ConfigError(0, "sweep.initial_state", "no initial state");
  for (const auto& name : initial_states) {
    StatePreset preset;
    try {
      preset = parse_state_preset(name);
      preset.build();
    } catch (const Error& e) {
      throw ConfigError(0, "sweep.initial_state", e.what());
    }
    if (preset.system() != system) {
      throw ConfigError(0, "sweep.initial_state",
                        "state '" + name + "' does not belong to system " + std::string(to_string(system)));
    }
  }
  const auto& known = all_measure_names();
  for (const auto& m : measures) {
    if (m != "E" && std::find(known.begin(), known.end(), m) == known.end()) {
      throw ConfigError(0, "sweep.measures", "unknown measure '" + m + "'");
    }
  }
}

SweepConfig parse_config(std::istream& in) {
  SweepConfig cfg;
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(line, "", "unterminated section header");
      section = std::string(trim(text.substr(1, text.size() - 2)));
      if (section != "sweep" && section != "grid") throw ConfigError(line, section, "unknown section");
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line, "", "expected key = value");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "", "missing key");
    if (value.empty()) throw ConfigError(line, std::string(key), "missing value");
    assign(cfg, section, key, value, line);
  }
  cfg.validate();
  return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, path, "cannot open config file");
  return parse_config(in);
}

void apply_override(SweepConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError(0, std::string(assignment), "override needs key=value");
  std::string_view key = trim(assignment.substr(0, eq));
  std::string_view section;
  if (const auto dot = key.find('.'); dot != std::string_view::npos) {
    section = key.substr(0, dot);
    key = key.substr(dot + 1);
  }
  assign(config, section, key, trim(assignment.substr(eq + 1)), 0);
  config.validate();
}

std::string_view to_string(TiePolicy policy) {
  for (const auto& [name, value] : kTies) {
    if (value == policy) return name;
  }
  return "?";
}

std::string_view to_string(NormalizationMode mode) {
  return mode == NormalizationMode::raw ? "raw" : "normalized";
}

std::string_view to_string(CompareSector sector) {
  return sector == CompareSector::full_4dim ? "full_4dim" : "projected_3dim";
}

std::string format_config(const SweepConfig& c) {
  std::ostringstream out;
  out << "[sweep]\n";
  out << "system = " << to_string(c.system) << "\n";
  out << "initial_state = ";
  for (std::size_t i = 0; i < c.initial_states.size(); ++i) out << (i ? "; " : "") << c.initial_states[i];
  out << "\n";
  out << "tie_policy = " << to_string(c.tie_policy) << "\n";
  out << "phi = " << number(c.phi) << "\n";
  if (!c.measures.empty()) {
    out << "measures = ";
    for (std::size_t i = 0; i < c.measures.size(); ++i) out << (i ? ", " : "") << c.measures[i];
    out << "\n";
  }
  out << "normalization_mode = " << to_string(c.normalization_mode) << "\n";
  out << "qutrit_compare_sector = " << to_string(c.qutrit_compare_sector) << "\n";
  out << "threads = " << c.threads << "\n\n[grid]\n";
  out << "r = " << grid_text(c.r_grid) << "\n";
  out << "strength = " << grid_text(c.strength_grid) << "\n";
  if (c.reverse_grid) out << "reverse = " << grid_text(*c.reverse_grid) << "\n";
  if (c.weak_a_grid) out << "weak_a = " << grid_text(*c.weak_a_grid) << "\n";
  if (c.weak_b_grid) out << "weak_b = " << grid_text(*c.weak_b_grid) << "\n";
  if (c.reverse_a_grid) out << "reverse_a = " << grid_text(*c.reverse_a_grid) << "\n";
  if (c.reverse_b_grid) out << "reverse_b = " << grid_text(*c.reverse_b_grid) << "\n";
  return out.str();
}

}  // namespace unruhlab
