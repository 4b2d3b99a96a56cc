#include "qutrit/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qutrit/figures.hpp"
#include "qutrit/format.hpp"

namespace qutrit {

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string_view to_string(EmitKind e) {
  switch (e) {
    case EmitKind::timeseries: return "timeseries";
    case EmitKind::phase_portrait: return "phase_portrait";
    case EmitKind::sectors: return "sectors";
  }
  return "?";
}

bool RunConfig::operator==(const RunConfig& o) const {
  return sim.config == o.sim.config && sim.kappa_a == o.sim.kappa_a && sim.kappa_b == o.sim.kappa_b &&
         sim.delta == o.sim.delta && sim.c0.amplitudes() == o.sim.c0.amplitudes() &&
         sim.convention == o.sim.convention && t_max == o.t_max && dt == o.dt && output == o.output &&
         format == o.format && emit == o.emit;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"config", "kappa_a", "kappa_b", "delta",  "c0_re", "c0_im",
                                                "convention", "t_max", "dt",  "emit", "format", "output"};
  return keys;
}

const std::vector<std::string>& required_config_keys() {
  static const std::vector<std::string> keys = {"config", "kappa_a", "kappa_b", "delta", "t_max", "dt"};
  return keys;
}

namespace {

struct Entry {
  std::string value;
  int line;  // 0 for command-line overrides
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(const std::string& key, int line) {
  return line > 0 ? "line " + std::to_string(line) + " (" + key + ")" : "override --" + key;
}

double parse_number(const std::string& key, const Entry& e) {
  const std::string_view v = trim(e.value);
  double out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigParseError(where(key, e.line) + ": '" + e.value + "' is not a number", e.line);
  if (!std::isfinite(out)) throw ConfigParseError(where(key, e.line) + ": value must be finite", e.line);
  return out;
}

std::array<double, 3> parse_triple(const std::string& key, const Entry& e) {
  std::array<double, 3> out{};
  std::string_view rest = e.value;
  for (int i = 0; i < 3; ++i) {
    const auto comma = rest.find(',');
    if ((i < 2) == (comma == std::string_view::npos))
      throw ConfigParseError(where(key, e.line) + ": expected three comma-separated numbers", e.line);
    const std::string_view field = i < 2 ? rest.substr(0, comma) : rest;
    out[static_cast<std::size_t>(i)] = parse_number(key, Entry{std::string(field), e.line});
    if (i < 2) rest = rest.substr(comma + 1);
  }
  return out;
}

template <typename Enum, std::size_t N>
Enum parse_choice(const std::string& key, const Entry& e, const std::array<std::pair<std::string_view, Enum>, N>& choices) {
  const std::string_view v = trim(e.value);
  std::string allowed;
  for (const auto& [text, value] : choices) {
    if (v == text) return value;
    allowed += (allowed.empty() ? "" : ", ") + std::string(text);
  }
  throw ConfigValidationError(where(key, e.line) + ": unknown value '" + std::string(v) + "' (expected " + allowed + ")",
                              key);
}

bool is_known_key(const std::string& key) {
  for (const auto& k : config_keys())
    if (k == key) return true;
  return false;
}

void check_key(const std::string& key, int line) {
  if (key.rfind("delta_", 0) == 0)
    throw ConfigValidationError(where(key, line) + ": unequal detunings are not supported; use the single key 'delta'",
                                key);
  if (!is_known_key(key)) throw ConfigValidationError(where(key, line) + ": unknown key '" + key + "'", key);
}

}  // namespace

RunConfig parse_run_config(std::string_view text, const std::map<std::string, std::string>& overrides) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigParseError("line " + std::to_string(line_no) + ": expected key=value", line_no);
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigParseError("line " + std::to_string(line_no) + ": empty key", line_no);
    check_key(key, line_no);
    if (entries.count(key))
      throw ConfigParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no);
    entries[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
  }
  for (const auto& [key, value] : overrides) {
    check_key(key, 0);
    entries[key] = Entry{value, 0};
  }

  // Malformed values are reported before missing keys.
  for (const char* key : {"kappa_a", "kappa_b", "delta", "t_max", "dt"})
    if (entries.count(key)) parse_number(key, entries[key]);
  for (const char* key : {"c0_re", "c0_im"})
    if (entries.count(key)) parse_triple(key, entries[key]);

  std::string missing;
  for (const auto& k : required_config_keys())
    if (!entries.count(k)) missing += (missing.empty() ? "" : ", ") + k;
  if (!missing.empty()) throw ConfigValidationError("missing required keys: " + missing, missing);

  RunConfig cfg;
  cfg.sim.config = parse_choice<Configuration, 3>(
      "config", entries["config"],
      {{{"lambda", Configuration::Lambda}, {"vee", Configuration::Vee}, {"xi", Configuration::Xi}}});
  cfg.sim.kappa_a = parse_number("kappa_a", entries["kappa_a"]);
  cfg.sim.kappa_b = parse_number("kappa_b", entries["kappa_b"]);
  cfg.sim.delta = parse_number("delta", entries["delta"]);
  if (cfg.sim.kappa_a < 0) throw ConfigValidationError("kappa_a must be non-negative", "kappa_a");
  if (cfg.sim.kappa_b < 0) throw ConfigValidationError("kappa_b must be non-negative", "kappa_b");

  if (entries.count("c0_re") || entries.count("c0_im")) {
    std::array<double, 3> re{};
    std::array<double, 3> im{};
    if (entries.count("c0_re")) {
      re = parse_triple("c0_re", entries["c0_re"]);
    } else {
      re.fill(1.0 / std::sqrt(3.0));
    }
    if (entries.count("c0_im")) im = parse_triple("c0_im", entries["c0_im"]);
    Vector3cd c;
    for (int i = 0; i < 3; ++i) c(i) = {re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]};
    const double defect = std::abs(c.squaredNorm() - 1.0);
    if (defect > tol::trajectory) {
      const std::string key = entries.count("c0_re") ? "c0_re" : "c0_im";
      throw ConfigValidationError(key + ": initial amplitudes are not normalized (|sum |c|^2 - 1| = " +
                                      format_double(defect) + ")",
                                  key);
    }
    cfg.sim.c0 = PureState<double>(c, tol::trajectory);
  }

  if (entries.count("convention"))
    cfg.sim.convention = parse_choice<CouplingConvention, 2>(
        "convention", entries["convention"],
        {{{"half", CouplingConvention::half}, {"full", CouplingConvention::full}}});
  if (entries.count("emit"))
    cfg.emit = parse_choice<EmitKind, 3>("emit", entries["emit"],
                                         {{{"timeseries", EmitKind::timeseries},
                                           {"phase_portrait", EmitKind::phase_portrait},
                                           {"sectors", EmitKind::sectors}}});
  if (entries.count("format"))
    cfg.format = parse_choice<OutputFormat, 2>("format", entries["format"],
                                               {{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}}});
  if (entries.count("output") && entries["output"].value != "-") cfg.output = entries["output"].value;

  cfg.t_max = parse_number("t_max", entries["t_max"]);
  cfg.dt = parse_number("dt", entries["dt"]);
  if (!(cfg.t_max > 0)) throw ConfigValidationError("t_max must be positive", "t_max");
  if (!(cfg.dt > 0)) throw ConfigValidationError("dt must be positive", "dt");
  if (cfg.dt > cfg.t_max) throw ConfigValidationError("dt must not exceed t_max", "dt");
  return cfg;
}

std::string render_run_config(const RunConfig& cfg) {
  const auto& c = cfg.sim.c0.amplitudes();
  std::ostringstream os;
  os << "config=" << to_string(cfg.sim.config) << '\n'
     << "kappa_a=" << format_double(cfg.sim.kappa_a) << '\n'
     << "kappa_b=" << format_double(cfg.sim.kappa_b) << '\n'
     << "delta=" << format_double(cfg.sim.delta) << '\n'
     << "c0_re=" << format_double(c(0).real()) << ',' << format_double(c(1).real()) << ','
     << format_double(c(2).real()) << '\n'
     << "c0_im=" << format_double(c(0).imag()) << ',' << format_double(c(1).imag()) << ','
     << format_double(c(2).imag()) << '\n'
     << "convention=" << to_string(cfg.sim.convention) << '\n'
     << "t_max=" << format_double(cfg.t_max) << '\n'
     << "dt=" << format_double(cfg.dt) << '\n'
     << "emit=" << to_string(cfg.emit) << '\n'
     << "format=" << to_string(cfg.format) << '\n';
  if (!cfg.output.empty()) os << "output=" << cfg.output << '\n';
  return os.str();
}

std::vector<std::string> bundled_config_names() {
  std::vector<std::string> names;
  for (const auto& f : figure_sets()) names.push_back(f.name);
  return names;
}

std::string bundled_config(std::string_view name) {
  for (const auto& f : figure_sets()) {
    if (f.name != name) continue;
    std::ostringstream os;
    os << "# " << f.name << ": " << to_string(f.config) << " configuration, equal initial populations\n"
       << "config=" << to_string(f.config) << '\n'
       << "kappa_a=" << f.kappa_a << '\n'
       << "kappa_b=" << f.kappa_b << '\n'
       << "delta=" << f.delta << '\n'
       << "convention=half\n"
       << "t_max=100\n"
       << "dt=0.01\n"
       << "emit=" << f.emit << '\n'
       << "format=csv\n"
       << "output=" << f.name << ".csv\n";
    return os.str();
  }
  throw std::invalid_argument("no bundled configuration named '" + std::string(name) + "'");
}

}  // namespace qutrit
