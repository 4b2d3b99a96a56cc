#ifndef QUTRIT_CONFIG_HPP
#define QUTRIT_CONFIG_HPP

// Flat key=value run configuration.
//
//   # comment
//   config=lambda            lambda | vee | xi
//   kappa_a=0.3
//   kappa_b=0.2
//   delta=0
//   c0_re=0.577,0.577,0.577  optional, default equal populations
//   c0_im=0,0,0              optional, default zeros
//   convention=half          half | full
//   t_max=100
//   dt=0.01
//   emit=timeseries          timeseries | phase_portrait | sectors
//   format=csv               csv | json
//   output=run.csv           optional; absent or '-' means stdout

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/dynamics.hpp"

namespace qutrit {

enum class OutputFormat { csv, json };
enum class EmitKind { timeseries, phase_portrait, sectors };

std::string_view to_string(OutputFormat f);
std::string_view to_string(EmitKind e);

struct RunConfig {
  SimParams<double> sim;
  double t_max = 0;
  double dt = 0;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  EmitKind emit = EmitKind::timeseries;

  bool operator==(const RunConfig& other) const;
};

/// Malformed document: bad syntax or a value that does not parse. line is 1-based, 0 if unknown.
class ConfigParseError : public std::runtime_error {
 public:
  ConfigParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed document whose content violates a RunConfig invariant.
class ConfigValidationError : public std::runtime_error {
 public:
  ConfigValidationError(const std::string& what, std::string key)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Recognised keys, in rendering order.
const std::vector<std::string>& config_keys();
const std::vector<std::string>& required_config_keys();

/// Parses and validates; entries of overrides replace (or add) document keys.
RunConfig parse_run_config(std::string_view text, const std::map<std::string, std::string>& overrides = {});

/// Inverse of parse_run_config; always writes every key.
std::string render_run_config(const RunConfig& cfg);

/// Text of a bundled figure configuration (fig1a .. fig6b).
std::string bundled_config(std::string_view name);

std::vector<std::string> bundled_config_names();

}  // namespace qutrit

#endif  // QUTRIT_CONFIG_HPP
