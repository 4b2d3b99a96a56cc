#ifndef QUTRIT_FIGURES_HPP
#define QUTRIT_FIGURES_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/dynamics.hpp"

namespace qutrit {

/// Named parameter set of one bundled reproduction run. All runs start from
/// equal populations and cover t in [0, 100] at dt = 0.01.
struct FigureSet {
  std::string name;
  Configuration config;
  double kappa_a;
  double kappa_b;
  double delta;
  std::string emit;
};

/// fig1-3: time series at and off resonance. fig4-6: phase portraits,
/// "a" at resonance and "b" off resonance.
inline const std::vector<FigureSet>& figure_sets() {
  static const std::vector<FigureSet> sets = {
      {"fig1a", Configuration::Lambda, 0.3, 0.2, 0.0, "timeseries"},
      {"fig1b", Configuration::Lambda, 0.3, 0.2, 0.2, "timeseries"},
      {"fig2a", Configuration::Vee, 0.3, 0.2, 0.0, "timeseries"},
      {"fig2b", Configuration::Vee, 0.3, 0.2, 0.2, "timeseries"},
      {"fig3a", Configuration::Xi, 0.2, 0.3, 0.0, "timeseries"},
      {"fig3b", Configuration::Xi, 0.2, 0.3, 20.0, "timeseries"},
      {"fig4a", Configuration::Lambda, 0.3, 0.2, 0.0, "phase_portrait"},
      {"fig4b", Configuration::Lambda, 0.3, 0.2, 1.2, "phase_portrait"},
      {"fig5a", Configuration::Vee, 0.3, 0.2, 0.0, "phase_portrait"},
      {"fig5b", Configuration::Vee, 0.3, 0.2, 0.2, "phase_portrait"},
      {"fig6a", Configuration::Xi, 0.2, 0.3, 0.0, "phase_portrait"},
      {"fig6b", Configuration::Xi, 0.2, 0.3, 20.0, "phase_portrait"},
  };
  return sets;
}

/// Distinct (configuration, couplings, detuning) combinations among figure_sets().
inline std::vector<SimParams<double>> distinct_figure_params() {
  std::vector<SimParams<double>> out;
  for (const auto& f : figure_sets()) {
    bool seen = false;
    for (const auto& p : out)
      seen = seen || (p.config == f.config && p.kappa_a == f.kappa_a && p.kappa_b == f.kappa_b && p.delta == f.delta);
    if (seen) continue;
    SimParams<double> p;
    p.config = f.config;
    p.kappa_a = f.kappa_a;
    p.kappa_b = f.kappa_b;
    p.delta = f.delta;
    out.push_back(p);
  }
  return out;
}

inline std::string describe(const SimParams<double>& p) {
  std::ostringstream os;
  os << to_string(p.config) << " ka=" << p.kappa_a << " kb=" << p.kappa_b << " delta=" << p.delta;
  return os.str();
}

}  // namespace qutrit

#endif  // QUTRIT_FIGURES_HPP
