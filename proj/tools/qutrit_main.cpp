// qutrit: simulate three-level dynamics, run the invariant suites, print cardinal states.
//
//   qutrit simulate run.cfg [--delta 0.2 --output out.csv ...] [--method exact|rk4]
//   qutrit simulate --figure fig4b
//   qutrit verify [algebra|state|dynamics|all]
//   qutrit cardinal superposeAll [--phi1 0.3 --phi2 1.1]

#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qutrit/config.hpp"
#include "qutrit/format.hpp"
#include "qutrit/simulate.hpp"
#include "qutrit/state.hpp"
#include "qutrit/verify.hpp"

namespace {

using namespace qutrit;

int usage_error(const std::string& msg, const CLI::App& app) {
  std::cerr << "error: " << msg << "\n\n" << app.help();
  return exit_code::usage;
}

int run_simulate_command(const std::string& path, const std::string& figure, const std::string& method,
                         const std::map<std::string, std::string>& overrides, const CLI::App& app) {
  if (path.empty() == figure.empty()) return usage_error("give exactly one of CONFIG_FILE or --figure", app);
  std::string text;
  if (!figure.empty()) {
    try {
      text = bundled_config(figure);
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what(), app);
    }
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "I/O error: cannot read '" << path << "'\n";
      return exit_code::io_error;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  RunConfig cfg;
  try {
    cfg = parse_run_config(text, overrides);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_code::usage;
  }
  const Propagator prop = method == "rk4" ? Propagator::rk4 : Propagator::exact;
  try {
    return run_simulate(cfg, prop, std::cout, std::cerr);
  } catch (const GridError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return exit_code::invariant_breach;
  }
}

int run_cardinal_command(const std::string& label_text, double phi1, double phi2, const CLI::App& app) {
  CardinalLabel label;
  try {
    label = parse_cardinal_label(label_text);
  } catch (const std::invalid_argument& e) {
    return usage_error(std::string(e.what()) +
                           " (expected one, two, three, superpose12, superpose23, superpose13, superposeAll)",
                       app);
  }
  const CardinalState<double> cs = cardinal_state<double>(label, phi1, phi2);
  const BlochVector8d n = bloch_from_amplitudes(cs.state.amplitudes());
  std::cout << "label: " << to_string(label) << '\n'
            << "angles: theta1=" << format_double(cs.angles.theta1()) << " theta2=" << format_double(cs.angles.theta2())
            << " phi1=" << format_double(cs.angles.phi1()) << " phi2=" << format_double(cs.angles.phi2()) << '\n';
  for (int i = 0; i < 3; ++i)
    std::cout << "c" << i + 1 << ": " << format_double(cs.state[i].real()) << (cs.state[i].imag() < 0 ? " - " : " + ")
              << format_double(std::abs(cs.state[i].imag())) << "i\n";
  std::cout << "bloch:";
  for (int k = 0; k < 8; ++k) std::cout << (k ? "," : " ") << format_double(n(k));
  std::cout << "\nnorm2: " << format_double(n.squaredNorm()) << '\n';
  return exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(3) Bloch-vector dynamics of driven three-level systems"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Propagate a run configuration and export the trajectory");
  std::string path;
  std::string figure;
  std::string method = "exact";
  sim->add_option("CONFIG_FILE", path, "key=value run configuration");
  sim->add_option("--figure", figure, "bundled configuration (fig1a .. fig6b)");
  sim->add_option("--method", method, "propagator")->check(CLI::IsMember({"exact", "rk4"}));
  std::map<std::string, std::string> override_values;
  std::map<std::string, CLI::Option*> override_opts;
  for (const auto& key : config_keys())
    override_opts[key] = sim->add_option("--" + key, override_values[key], "override config key '" + key + "'");

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  std::string scope = "all";
  ver->add_option("SCOPE", scope, "algebra | state | dynamics | all")
      ->check(CLI::IsMember({"algebra", "state", "dynamics", "all"}));

  auto* card = app.add_subcommand("cardinal", "Print a cardinal or superposition state");
  std::string label;
  double phi1 = 0;
  double phi2 = 0;
  card->add_option("LABEL", label, "one | two | three | superpose12 | superpose23 | superpose13 | superposeAll")
      ->required();
  card->add_option("--phi1", phi1, "azimuth on |2>, [0, 2pi)");
  card->add_option("--phi2", phi2, "azimuth on |3>, [0, 2pi)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage;
  }

  if (sim->parsed()) {
    std::map<std::string, std::string> overrides;
    for (const auto& [key, opt] : override_opts)
      if (opt->count()) overrides[key] = override_values[key];
    return run_simulate_command(path, figure, method, overrides, *sim);
  }
  if (ver->parsed()) {
    const auto reports = run_verify(parse_verify_scope(scope));
    print_reports(std::cout, reports);
    return verify_exit_code(reports);
  }
  try {
    return run_cardinal_command(label, phi1, phi2, *card);
  } catch (const std::domain_error& e) {
    return usage_error(e.what(), *card);
  }
}
