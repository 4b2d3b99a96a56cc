#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qutrit/output.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

/// Runs the CLI with args, capturing stdout (stderr folded in when merge is set).
Run run_cli(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(QUTRIT_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "qutrit_test_cli";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verify exits 0 and reports every suite") {
  const Run r = run_cli("verify all");
  CHECK(r.status == 0);
  CHECK(r.out.find("algebra: 8/8 checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run_cli("verify algebra").status == 0);
  CHECK(run_cli("verify state").status == 0);
  CHECK(run_cli("verify dynamics").status == 0);
  CHECK(run_cli("verify everything").status != 0);
}

TEST_CASE("cardinal states") {
  const Run one = run_cli("cardinal one");
  CHECK(one.status == 0);
  CHECK(one.out.find("c1: 1 + 0i") != std::string::npos);
  CHECK(one.out.find("bloch: 0,0,1,0,0,0,0,0.57735026918962") != std::string::npos);
  const Run all = run_cli("cardinal superposeAll --phi1 0.5 --phi2 1");
  CHECK(all.status == 0);
  CHECK(all.out.find("theta1=1.5707963267948966 theta2=1.0471975511965976") != std::string::npos);
  CHECK(all.out.find("norm2: 1.33333333333333") != std::string::npos);

  const Run bad = run_cli("cardinal four", true);
  CHECK(bad.status == 64);
  CHECK(bad.out.find("Usage") != std::string::npos);
  CHECK(run_cli("cardinal two --phi1 7").status == 64);
  CHECK(run_cli("", true).status == 64);
}

TEST_CASE("simulate a bundled figure") {
  const fs::path dir = scratch();
  const fs::path a = dir / "fig1a.csv";
  const fs::path b = dir / "fig1a_again.csv";
  CHECK(run_cli("simulate --figure fig1a --output " + a.string()).status == 0);
  CHECK(run_cli("simulate " + std::string(QUTRIT_CONFIG_DIR) + "/fig1a.cfg --output " + b.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  std::ifstream in(a);
  const auto rows = qutrit::read_csv(in);
  CHECK(rows.size() == 10001);
}

TEST_CASE("flags override config keys") {
  const Run r = run_cli("simulate --figure fig4a --delta 1.2 --t_max 1 --format json --output -");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("{\"meta\":{\"config\":\"lambda\"", 0) == 0);
  CHECK(r.out.find("\"delta\":1.2") != std::string::npos);
  CHECK(r.out.find("\"emit\":\"phase_portrait\"") != std::string::npos);
}

TEST_CASE("simulate error exits") {
  const fs::path dir = scratch();
  CHECK(run_cli("simulate " + (dir / "missing.cfg").string()).status == 2);
  CHECK(run_cli("simulate --figure fig2a --output /nonexistent-dir/x.csv").status == 2);
  CHECK(run_cli("simulate --figure fig3b --method rk4 --output -").status == 3);
  CHECK(run_cli("simulate --figure fig9z").status == 64);
  CHECK(run_cli("simulate").status == 64);

  std::ofstream(dir / "bad.cfg") << "config=lambda\nkappa_a=0.3\nkappa_b=abc\ndelta=0\nt_max=1\ndt=0.1\n";
  const Run bad = run_cli("simulate " + (dir / "bad.cfg").string(), true);
  CHECK(bad.status == 64);
  CHECK(bad.out.find("line 3") != std::string::npos);

  std::ofstream(dir / "unequal.cfg") << "config=lambda\nkappa_a=0.3\nkappa_b=0.2\ndelta_13=0\nt_max=1\ndt=0.1\n";
  const Run unequal = run_cli("simulate " + (dir / "unequal.cfg").string(), true);
  CHECK(unequal.status == 64);
  CHECK(unequal.out.find("unequal detunings") != std::string::npos);
}
