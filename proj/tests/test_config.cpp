#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qutrit/config.hpp"
#include "qutrit/figures.hpp"
#include "qutrit/sampling.hpp"

using namespace qutrit;

namespace {

const std::string fig1a = "config=lambda\nkappa_a=0.3\nkappa_b=0.2\ndelta=0\nt_max=100\ndt=0.01";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("minimal document gets documented defaults") {
  const RunConfig cfg = parse_run_config(fig1a);
  CHECK(cfg.sim.config == Configuration::Lambda);
  CHECK(cfg.sim.kappa_a == 0.3);
  CHECK(cfg.sim.kappa_b == 0.2);
  CHECK(cfg.sim.delta == 0.0);
  CHECK(cfg.t_max == 100.0);
  CHECK(cfg.dt == 0.01);
  CHECK(cfg.sim.convention == CouplingConvention::half);
  CHECK(cfg.emit == EmitKind::timeseries);
  CHECK(cfg.format == OutputFormat::csv);
  CHECK(cfg.output.empty());
  CHECK(approx_equal(cfg.sim.c0.amplitudes(), equal_population_state<double>().amplitudes(), 0.0));
}

TEST_CASE("comments, blank lines and whitespace") {
  const RunConfig cfg = parse_run_config(
      "# Xi ladder far off resonance\n\n config = xi \nkappa_a=0.2  # k12\nkappa_b=0.3\r\ndelta=20\nt_max=100\ndt=0.01\n");
  CHECK(cfg.sim.config == Configuration::Xi);
  CHECK(cfg.sim.delta == 20.0);
  CHECK(cfg.sim.kappa_a == 0.2);
}

TEST_CASE("empty document lists the required keys") {
  try {
    parse_run_config("");
    FAIL("expected validation error");
  } catch (const ConfigValidationError& e) {
    const std::string msg = e.what();
    for (const auto& k : required_config_keys()) CHECK(msg.find(k) != std::string::npos);
  }
}

TEST_CASE("non-numeric value is a parse error with its line number") {
  try {
    parse_run_config("config=lambda\nkappa_a=0.3\nkappa_b=zero\ndelta=0\nt_max=100\ndt=0.01");
    FAIL("expected parse error");
  } catch (const ConfigParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_run_config(fig1a + "\nconvention"), ConfigParseError);
  CHECK_THROWS_AS(parse_run_config(fig1a + "\ndelta=1"), ConfigParseError);
  CHECK_THROWS_AS(parse_run_config(fig1a + "\nc0_re=1,0"), ConfigParseError);
  CHECK_THROWS_AS(parse_run_config("config=lambda\nkappa_a=0.3x\nkappa_b=0.2\ndelta=0\nt_max=100\ndt=0.01"),
                  ConfigParseError);
}

TEST_CASE("validation errors") {
  auto key_of = [](const std::string& doc) {
    try {
      parse_run_config(doc);
    } catch (const ConfigValidationError& e) {
      return e.key();
    }
    return std::string("<none>");
  };
  CHECK(key_of("config=omega\nkappa_a=0.3\nkappa_b=0.2\ndelta=0\nt_max=100\ndt=0.01") == "config");
  CHECK(key_of(fig1a + "\nc0_re=1,1,0") == "c0_re");
  CHECK(key_of(fig1a + "\nc0_re=1,0,0\nc0_im=0,0.1,0") == "c0_re");
  CHECK(key_of(fig1a + "\nwidth=3") == "width");
  CHECK(key_of(fig1a + "\ndelta_13=0.1") == "delta_13");
  CHECK(key_of(fig1a + "\nemit=movie") == "emit");
  CHECK(key_of(fig1a + "\nformat=xml") == "format");
  CHECK(key_of(fig1a + "\nconvention=quarter") == "convention");
  CHECK(key_of("config=lambda\nkappa_a=-0.3\nkappa_b=0.2\ndelta=0\nt_max=100\ndt=0.01") == "kappa_a");
  CHECK(key_of("config=lambda\nkappa_a=0.3\nkappa_b=0.2\ndelta=0\nt_max=1\ndt=2") == "dt");
  CHECK(key_of("config=lambda\nkappa_a=0.3\nkappa_b=0.2\ndelta=0\nt_max=1\ndt=0") == "dt");
  CHECK(key_of("config=lambda\nkappa_a=0.3\nkappa_b=0.2\ndelta=0\nt_max=-1\ndt=0.1") == "t_max");
}

TEST_CASE("unequal detunings get a dedicated message") {
  try {
    parse_run_config(fig1a + "\ndelta_23=0.1");
  } catch (const ConfigValidationError& e) {
    CHECK(std::string(e.what()).find("unequal detunings") != std::string::npos);
  }
}

TEST_CASE("normalization within 1e-9 is accepted, not renormalized") {
  const RunConfig cfg = parse_run_config(fig1a + "\nc0_re=0.6,0,0\nc0_im=0,0.8000000001,0");
  CHECK(cfg.sim.c0[1].imag() == 0.8000000001);
  CHECK_THROWS_AS(parse_run_config(fig1a + "\nc0_re=0.6,0,0\nc0_im=0,0.80001,0"), ConfigValidationError);
}

TEST_CASE("overrides replace document keys") {
  const RunConfig cfg = parse_run_config(fig1a, {{"delta", "1.2"}, {"format", "json"}, {"output", "x.json"}});
  CHECK(cfg.sim.delta == 1.2);
  CHECK(cfg.format == OutputFormat::json);
  CHECK(cfg.output == "x.json");
  CHECK(parse_run_config(fig1a, {{"output", "-"}}).output.empty());
  CHECK_THROWS_AS(parse_run_config(fig1a, {{"delta", "fast"}}), ConfigParseError);
  CHECK_THROWS_AS(parse_run_config(fig1a, {{"bogus", "1"}}), ConfigValidationError);
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    RunConfig cfg;
    cfg.sim.config = static_cast<Configuration>(i % 3);
    cfg.sim.kappa_a = u(rng);
    cfg.sim.kappa_b = u(rng);
    cfg.sim.delta = u(rng) - 1.0;
    cfg.sim.c0 = sample_pure_state(rng);
    cfg.sim.convention = i % 2 ? CouplingConvention::full : CouplingConvention::half;
    cfg.t_max = 50 + u(rng);
    cfg.dt = 0.001 + u(rng) / 100;
    cfg.emit = static_cast<EmitKind>(i % 3);
    cfg.format = i % 4 ? OutputFormat::csv : OutputFormat::json;
    cfg.output = i % 5 ? "run_" + std::to_string(i) + ".csv" : "";
    const RunConfig back = parse_run_config(render_run_config(cfg));
    CHECK(back == cfg);
  }
}

TEST_CASE("bundled configurations") {
  const auto names = bundled_config_names();
  CHECK(names.size() == 12);
  CHECK(names.front() == "fig1a");
  CHECK(names.back() == "fig6b");
  for (const auto& f : figure_sets()) {
    const RunConfig cfg = parse_run_config(bundled_config(f.name));
    CHECK(cfg.sim.config == f.config);
    CHECK(cfg.sim.kappa_a == f.kappa_a);
    CHECK(cfg.sim.kappa_b == f.kappa_b);
    CHECK(cfg.sim.delta == f.delta);
    CHECK(cfg.t_max == 100.0);
    CHECK(cfg.dt == 0.01);
    CHECK(to_string(cfg.emit) == f.emit);
    // the shipped files carry the same configuration
    CHECK(parse_run_config(read_file(std::string(QUTRIT_CONFIG_DIR) + "/" + f.name + ".cfg")) == cfg);
  }
  const RunConfig fig3b = parse_run_config(bundled_config("fig3b"));
  CHECK(fig3b.sim.config == Configuration::Xi);
  CHECK(fig3b.sim.delta == 20.0);
  CHECK_THROWS_AS(bundled_config("fig7a"), std::invalid_argument);
}
