#include <doctest.h>

#include <numbers>
#include <sstream>

#include "unruhlab/config.hpp"
#include "unruhlab/sweep.hpp"

using namespace unruhlab;

namespace {

SweepConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ConfigError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected ConfigError");
  return ConfigError(0, "", "");
}

std::string csv_of(const SweepConfig& cfg) {
  std::ostringstream out;
  write_csv(out, cfg, run_sweep(cfg));
  return out.str();
}

}  // namespace

TEST_CASE("numbers with pi shorthands") {
  CHECK(parse_config_number("pi/4") == doctest::Approx(std::numbers::pi / 4));
  CHECK(parse_config_number("2*pi") == doctest::Approx(2 * std::numbers::pi));
  CHECK(parse_config_number("pi") == doctest::Approx(std::numbers::pi));
  CHECK(parse_config_number("-0.25") == -0.25);
  CHECK_THROWS_AS(parse_config_number("pie"), ConfigError);
}

TEST_CASE("linspace hits both endpoints") {
  const auto g = Grid::linspace(0, std::numbers::pi / 4, 80);
  CHECK(g.values.size() == 80);
  CHECK(g.values.front() == 0.0);
  CHECK(g.values.back() == std::numbers::pi / 4);
  CHECK(Grid::linspace(0.3, 0.3, 1).values == std::vector<double>{0.3});
}

TEST_CASE("config parses sections, lists and comments") {
  const auto cfg = parse(R"(# demo
[sweep]
system = two_qutrit
initial_state = qutrit:1; qutrit:0.5   # two states
tie_policy = weak_reverse_split
phi = pi/3
measures = E_norm, I_a
threads = 3

[grid]
r = 0 : pi/4 : 5
strength = 0.5, 0.8
reverse = 0.1
)");
  CHECK(cfg.system == SystemKind::two_qutrit);
  CHECK(cfg.initial_states == std::vector<std::string>{"qutrit:1", "qutrit:0.5"});
  CHECK(cfg.tie_policy == TiePolicy::weak_reverse_split);
  CHECK(cfg.phi == doctest::Approx(std::numbers::pi / 3));
  CHECK(cfg.r_grid.values.size() == 5);
  CHECK(cfg.strength_grid.values == std::vector<double>{0.5, 0.8});
  REQUIRE(cfg.reverse_grid);
  CHECK(cfg.reverse_grid->values == std::vector<double>{0.1});
  CHECK(cfg.threads == 3);
  CHECK(cfg.resolved_measures() == std::vector<std::string>{"E_norm", "I_a", "p_success"});
}

TEST_CASE("config errors carry line and field") {
  auto e = parse_error("[sweep]\nsystem = three_qubit\n");
  CHECK(e.line == 2);
  CHECK(e.field == "sweep.system");
  e = parse_error("[grid]\n\nr = 0 : 1 : 4\n");
  CHECK(e.field == "grid.r");
  e = parse_error("[grid]\nstrength = 0 : 0.5\n");
  CHECK(e.line == 2);
  CHECK(e.field == "grid.strength");
  e = parse_error("[sweep]\ncolour = red\n");
  CHECK(e.line == 2);
  CHECK(e.field == "sweep.colour");
  e = parse_error("[plot]\n");
  CHECK(e.line == 1);
  e = parse_error("[sweep]\nphi\n");
  CHECK(e.line == 2);
  e = parse_error("[sweep]\ninitial_state = bell\n");
  CHECK(e.field == "sweep.initial_state");
  e = parse_error("[sweep]\nmeasures = E_norm, fidelity\n");
  CHECK(e.field == "sweep.measures");
  e = parse_error("[grid]\nstrength = 0.2, 1.5\n");
  CHECK(e.field == "grid.strength");
  e = parse_error("[sweep]\nsystem = two_qutrit\n");
  CHECK(e.field == "sweep.initial_state");
  CHECK(std::string(e.what()).rfind("config", 0) == 0);
}

TEST_CASE("overrides and round trip") {
  auto cfg = figure_preset("fig4b").config;
  apply_override(cfg, "sweep.phi=pi");
  apply_override(cfg, "grid.r=0:pi/4:3");
  CHECK(cfg.phi == doctest::Approx(std::numbers::pi));
  CHECK(cfg.r_grid.values.size() == 3);
  CHECK_THROWS_AS(apply_override(cfg, "sweep.phi"), ConfigError);

  const auto again = parse(format_config(cfg));
  CHECK(again.r_grid.values == cfg.r_grid.values);
  CHECK(again.strength_grid.values == cfg.strength_grid.values);
  CHECK(again.initial_states == cfg.initial_states);
  CHECK(again.phi == cfg.phi);
  CHECK(format_config(again) == format_config(cfg));
}

TEST_CASE("trivial sweep point") {
  SweepConfig cfg;
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].measures);
  const auto& m = *rows[0].measures;
  CHECK(m.entanglement_normalized == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.info_accelerated_bits == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.info_inertial_bits == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.coherent_info_standard_bits == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.success_probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rows follow lexicographic grid order for every tie policy") {
  SweepConfig cfg;
  cfg.initial_states = {"singlet", "werner:0.7"};
  cfg.r_grid = Grid::list({0.0, 0.4});
  cfg.strength_grid = Grid::list({0.1, 0.2});
  cfg.tie_policy = TiePolicy::independent;
  const auto rows = run_sweep(cfg);
  CHECK(rows.size() == 2 * 2 * 16);
  CHECK(index_column_names(cfg).size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].indices < rows[i].indices);
  CHECK(rows.back().state == "werner:0.7");
  CHECK(rows[1].beta_b == 0.2);
  CHECK(rows[1].beta_a == 0.1);

  cfg.tie_policy = TiePolicy::weak_reverse_split;
  cfg.reverse_grid = Grid::list({0.5});
  const auto split = run_sweep(cfg);
  CHECK(split.size() == 2 * 2 * 2);
  CHECK(split[0].beta_a == 0.5);
  CHECK(split[0].alpha_a == 0.1);
}

TEST_CASE("thread count does not change the output") {
  auto cfg = figure_preset("fig2b").config;
  cfg.r_grid = Grid::linspace(0, kMaxRindler, 7);
  cfg.strength_grid = Grid::linspace(0, 0.98, 9);
  cfg.threads = 1;
  const auto one = csv_of(cfg);
  cfg.threads = 4;
  CHECK(csv_of(cfg) == one);
}

TEST_CASE("degenerate post-selection is marked, not fatal") {
  SweepConfig cfg;
  cfg.initial_states = {"x:0,0,1"};
  cfg.strength_grid = Grid::list({1.0});
  const auto csv = csv_of(cfg);
  CHECK(csv.find("degenerate") != std::string::npos);
}

TEST_CASE("CSV layout") {
  SweepConfig cfg;
  cfg.measures = {"E_norm"};
  const auto csv = csv_of(cfg);
  CHECK(csv.rfind("i_state,i_r,i_strength,state,r,alpha_a,alpha_b,beta_a,beta_b,E_norm,p_success,status\n", 0) ==
        0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("figure presets") {
  CHECK(figure_names().size() == 12);
  for (const auto& name : figure_names()) {
    const auto p = figure_preset(name);
    CHECK_NOTHROW(p.config.validate());
    CHECK(!p.plotted.empty());
    CHECK(plot_script(p, name + ".csv").find(name + ".csv") != std::string::npos);
  }
  const auto f1b = figure_preset("fig1b");
  CHECK(f1b.config.initial_states == std::vector<std::string>{"werner:0.7"});
  CHECK(f1b.config.tie_policy == TiePolicy::all_equal);
  CHECK(figure_preset("fig4b").config.strength_grid.values == std::vector<double>{0.5, 0.8, 0.9});
  CHECK(figure_preset("fig6a").config.system == SystemKind::two_qutrit);
  CHECK_THROWS_AS(figure_preset("fig7"), UnknownPreset);
}

TEST_CASE("strength-axis growth of the partially entangled qutrit against the maximal one") {
  // Signed step E(r, s[j+1]) - E(r, s[j]) on 20 x 20 grids. Counts frozen
  // from tests/oracle/protocol_oracle.py; smallest nonzero margin 5.5e-6.
  const auto rs = Grid::linspace(0, kMaxRindler, 20).values;
  const auto ss = Grid::linspace(0, 0.98, 20).values;
  auto surface = [&](double gamma) {
    std::vector<std::vector<double>> e;
    for (double r : rs) {
      auto& row = e.emplace_back();
      for (double s : ss) {
        row.push_back(evaluate_point(make_qutrit_state({gamma}), ProtocolParams::tied(SystemKind::two_qutrit, r, s))
                          ->entanglement_normalized);
      }
    }
    return e;
  };
  const auto pes = surface(0.5);
  const auto mes = surface(1.0);
  int greater = 0, less = 0, tie = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ss.size(); ++j) {
      const double d = (pes[i][j + 1] - pes[i][j]) - (mes[i][j + 1] - mes[i][j]);
      (d > 1e-9 ? greater : d < -1e-9 ? less : tie)++;
    }
  }
  CHECK(greater == 297);
  CHECK(less == 64);
  CHECK(tie == 19);
}
