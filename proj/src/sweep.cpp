#include "unruhlab/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

namespace unruhlab {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::optional<MeasuresReport> evaluate_point(const DensityMatrix& initial, const ProtocolParams& params,
                                             CompareSector sector) {
  try {
    const ProtocolResult result = run_protocol(initial, params);
    double p = result.success_probability();
    if (sector == CompareSector::projected_3dim && result.final_state.dims()[0] == 4) {
      const DensityMatrix projected = restrict_to_qutrit_sector(result.final_state, true);
      p *= restrict_to_qutrit_sector(result.final_state, false).trace();
      return measure_all(projected, p);
    }
    return measure_all(result.final_state, p);
  } catch (const DegenerateOutcome&) {
    return std::nullopt;
  }
}

namespace {

struct Axis {
  std::string name;
  const std::vector<double>* values;
};

std::vector<Axis> strength_axes(const SweepConfig& c) {
  const auto* s = &c.strength_grid.values;
  auto or_default = [&](const std::optional<Grid>& g) { return g ? &g->values : s; };
  switch (c.tie_policy) {
    case TiePolicy::all_equal:
      return {{"strength", s}};
    case TiePolicy::weak_reverse_split:
      return {{"alpha", s}, {"beta", or_default(c.reverse_grid)}};
    case TiePolicy::independent:
      return {{"alpha_a", or_default(c.weak_a_grid)},
              {"alpha_b", or_default(c.weak_b_grid)},
              {"beta_a", or_default(c.reverse_a_grid)},
              {"beta_b", or_default(c.reverse_b_grid)}};
  }
  return {};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

double measure_value(const MeasuresReport& m, const std::string& name) {
  if (name == "neg_raw") return m.negativity_raw;
  if (name == "E_norm") return m.entanglement_normalized;
  if (name == "I_a") return m.info_accelerated_bits;
  if (name == "I_b") return m.info_inertial_bits;
  if (name == "I_coh_std") return m.coherent_info_standard_bits;
  if (name == "I_coh_paper") return m.coherent_info_paper_bits;
  return m.success_probability;
}

}  // namespace

std::vector<std::string> index_column_names(const SweepConfig& config) {
  std::vector<std::string> names{"i_state", "i_r"};
  for (const auto& axis : strength_axes(config)) names.push_back("i_" + axis.name);
  return names;
}

std::vector<SweepResultRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const int dim = config.system == SystemKind::two_qubit ? 2 : 3;

  std::vector<DensityMatrix> initial;
  for (const auto& name : config.initial_states) initial.push_back(parse_state_preset(name).build());

  const auto axes = strength_axes(config);
  std::vector<std::size_t> extent{config.initial_states.size(), config.r_grid.values.size()};
  for (const auto& a : axes) extent.push_back(a.values->size());
  std::size_t total = 1;
  for (auto e : extent) total *= e;

  // Row-major enumeration: the last axis varies fastest.
  auto make_row = [&](std::size_t flat) {
    SweepResultRow row;
    row.indices.resize(extent.size());
    for (std::size_t k = extent.size(); k-- > 0;) {
      row.indices[k] = static_cast<int>(flat % extent[k]);
      flat /= extent[k];
    }
    auto at = [&](std::size_t axis) {
      return (*axes[axis].values)[static_cast<std::size_t>(row.indices[axis + 2])];
    };
    const auto state_index = static_cast<std::size_t>(row.indices[0]);
    row.state = config.initial_states[state_index];
    row.r = config.r_grid.values[static_cast<std::size_t>(row.indices[1])];
    switch (config.tie_policy) {
      case TiePolicy::all_equal:
        row.alpha_a = row.alpha_b = row.beta_a = row.beta_b = at(0);
        break;
      case TiePolicy::weak_reverse_split:
        row.alpha_a = row.alpha_b = at(0);
        row.beta_a = row.beta_b = at(1);
        break;
      case TiePolicy::independent:
        row.alpha_a = at(0);
        row.alpha_b = at(1);
        row.beta_a = at(2);
        row.beta_b = at(3);
        break;
    }
    ProtocolParams params{
        MeasurementStrengths::per_party(MeasurementKind::weak, dim, row.alpha_a, row.alpha_b),
        MeasurementStrengths::per_party(MeasurementKind::reverse, dim, row.beta_a, row.beta_b),
        AccelerationSpec{std::min(row.r, kMaxRindler), config.phi}};
    row.measures = evaluate_point(initial[state_index], params, config.qutrit_compare_sector);
    return row;
  };

  std::vector<SweepResultRow> rows(total);
  const auto workers = static_cast<std::size_t>(std::max(1, config.threads));
  if (workers == 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) rows[i] = make_row(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < total; i = next++) rows[i] = make_row(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = total;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepResultRow>& rows) {
  const auto measures = config.resolved_measures();
  const auto index_names = index_column_names(config);
  for (const auto& n : index_names) out << n << ',';
  out << "state,r,alpha_a,alpha_b,beta_a,beta_b";
  for (const auto& m : measures) out << ',' << m;
  out << ",status\n";

  for (const auto& row : rows) {
    for (int i : row.indices) out << i << ',';
    out << csv_field(row.state) << ',' << format_number(row.r) << ',' << format_number(row.alpha_a) << ','
        << format_number(row.alpha_b) << ',' << format_number(row.beta_a) << ','
        << format_number(row.beta_b);
    for (const auto& m : measures) {
      out << ',';
      if (row.measures) out << format_number(measure_value(*row.measures, m));
    }
    out << ',' << (row.measures ? "ok" : "degenerate") << '\n';
  }
}

}  // namespace unruhlab
