#include <sstream>

#include "unruhlab/sweep.hpp"

namespace unruhlab {

namespace {

constexpr int kGridSteps = 80;
constexpr double kMaxStrength = 0.98;  // strength 1 annihilates the tied protocol

FigurePreset surface(std::string name, std::string title, SystemKind system, std::string state,
                     std::vector<std::string> plotted) {
  SweepConfig c;
  c.system = system;
  c.initial_states = {std::move(state)};
  c.r_grid = Grid::linspace(0.0, kMaxRindler, kGridSteps);
  c.strength_grid = Grid::linspace(0.0, kMaxStrength, kGridSteps);
  c.tie_policy = TiePolicy::all_equal;
  return {std::move(name), std::move(title), std::move(c), PlotKind::surface, std::move(plotted)};
}

FigurePreset lines(std::string name, std::string title, SystemKind system,
                   std::vector<std::string> states, std::vector<double> strengths,
                   std::vector<std::string> plotted) {
  SweepConfig c;
  c.system = system;
  c.initial_states = std::move(states);
  c.r_grid = Grid::linspace(0.0, kMaxRindler, kGridSteps);
  c.strength_grid = Grid::list(std::move(strengths));
  c.tie_policy = TiePolicy::all_equal;
  return {std::move(name), std::move(title), std::move(c), PlotKind::lines, std::move(plotted)};
}

std::vector<FigurePreset> build_presets() {
  using enum SystemKind;
  // Captions that cite c11 = c22 = c33 = 1 for the maximally entangled qubit
  // pair are mapped to the singlet; the Werner "0.7" is werner:0.7.
  return {
      surface("fig1a", "Entanglement, two qubits, singlet", two_qubit, "singlet", {"E_norm"}),
      surface("fig1b", "Entanglement, two qubits, Werner x=0.7", two_qubit, "werner:0.7", {"E_norm"}),
      surface("fig2a", "Entanglement, two qutrits, gamma=1", two_qutrit, "qutrit:1", {"E_norm"}),
      surface("fig2b", "Entanglement, two qutrits, gamma=0.5", two_qutrit, "qutrit:0.5", {"E_norm"}),
      surface("fig3a", "Coherent information, two qubits, singlet", two_qubit, "singlet", {"I_coh_std"}),
      surface("fig3b", "Accelerated information, two qubits, singlet", two_qubit, "singlet", {"I_a"}),
      lines("fig4a", "Local information, two qubits, MES and PES, strength 0.5", two_qubit,
            {"singlet", "werner:0.7"}, {0.5}, {"I_a", "I_b"}),
      lines("fig4b", "Local and coherent information, two qubits, singlet", two_qubit, {"singlet"},
            {0.5, 0.8, 0.9}, {"I_a", "I_coh_std"}),
      surface("fig5a", "Coherent information, two qutrits, gamma=1", two_qutrit, "qutrit:1", {"I_coh_std"}),
      surface("fig5b", "Accelerated information, two qutrits, gamma=1", two_qutrit, "qutrit:1", {"I_a"}),
      lines("fig6a", "Local information, two qutrits, MES and PES, strength 0.5", two_qutrit,
            {"qutrit:1", "qutrit:0.5"}, {0.5}, {"I_a", "I_b"}),
      lines("fig6b", "Local and coherent information, two qutrits, gamma=1", two_qutrit, {"qutrit:1"},
            {0.5, 0.8, 0.9}, {"I_a", "I_coh_std"}),
  };
}

const std::vector<FigurePreset>& presets() {
  static const std::vector<FigurePreset> all = build_presets();
  return all;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : presets()) out.push_back(p.name);
    return out;
  }();
  return names;
}

FigurePreset figure_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw UnknownPreset("unknown figure preset '" + name + "'");
}

std::string plot_script(const FigurePreset& preset, const std::string& csv_file) {
  std::ostringstream py;
  py << "# Plots " << preset.name << " from " << csv_file << ".\n"
     << "import csv\n"
     << "import sys\n"
     << "import matplotlib\n"
     << "matplotlib.use('Agg')\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "CSV = sys.argv[1] if len(sys.argv) > 1 else '" << csv_file << "'\n"
     << "COLUMNS = [";
  for (std::size_t i = 0; i < preset.plotted.size(); ++i) py << (i ? ", " : "") << "'" << preset.plotted[i] << "'";
  py << "]\n\n"
     << "rows = [r for r in csv.DictReader(open(CSV)) if r['status'] == 'ok']\n\n";

  if (preset.plot == PlotKind::surface) {
    py << "from mpl_toolkits.mplot3d import Axes3D  # noqa: F401\n"
       << "import numpy as np\n"
       << "rs = sorted({float(r['r']) for r in rows})\n"
       << "ss = sorted({float(r['alpha_a']) for r in rows})\n"
       << "for col in COLUMNS:\n"
       << "    z = np.full((len(ss), len(rs)), np.nan)\n"
       << "    for r in rows:\n"
       << "        z[ss.index(float(r['alpha_a'])), rs.index(float(r['r']))] = float(r[col])\n"
       << "    R, S = np.meshgrid(rs, ss)\n"
       << "    fig = plt.figure()\n"
       << "    ax = fig.add_subplot(projection='3d')\n"
       << "    ax.plot_surface(R, S, z, cmap='viridis')\n"
       << "    ax.set_xlabel('r')\n"
       << "    ax.set_ylabel('strength')\n"
       << "    ax.set_zlabel(col)\n"
       << "    ax.set_title('" << preset.title << "')\n"
       << "    fig.savefig('" << preset.name << "_' + col + '.png', dpi=150)\n";
  } else {
    py << "fig, ax = plt.subplots()\n"
       << "series = {}\n"
       << "for r in rows:\n"
       << "    for col in COLUMNS:\n"
       << "        key = (col, r['state'], r['alpha_a'])\n"
       << "        series.setdefault(key, ([], []))\n"
       << "        series[key][0].append(float(r['r']))\n"
       << "        series[key][1].append(float(r[col]))\n"
       << "for (col, state, strength), (x, y) in sorted(series.items()):\n"
       << "    ax.plot(x, y, label=f'{col} {state} s={strength}')\n"
       << "ax.set_xlabel('r')\n"
       << "ax.set_ylabel('bits')\n"
       << "ax.set_title('" << preset.title << "')\n"
       << "ax.legend(fontsize='small')\n"
       << "fig.savefig('" << preset.name << ".png', dpi=150)\n";
  }
  return py.str();
}

}  // namespace unruhlab
