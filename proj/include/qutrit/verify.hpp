#ifndef QUTRIT_VERIFY_HPP
#define QUTRIT_VERIFY_HPP

// Invariant suites behind `qutrit verify`. Every check reports its measured
// residual against a fixed tolerance; sampling uses fixed seeds.

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qutrit/dynamics.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0;
  double tolerance = 0;
  std::string detail;
};

struct SuiteReport {
  std::string scope;
  std::vector<CheckResult> checks;

  bool passed() const;
};

enum class VerifyScope { algebra, state, dynamics, all };

VerifyScope parse_verify_scope(const std::string& text);

/// Replaceable pieces of the state pipeline; used to exercise the suite against broken maps.
struct VerifyHooks {
  std::function<BlochVector8d(const AngleParams<double>&)> geometric = [](const AngleParams<double>& a) {
    return bloch_geometric(a);
  };
};

inline constexpr std::uint64_t angle_seed = 20240601;
inline constexpr std::uint64_t mixture_seed = 20240602;
inline constexpr std::size_t angle_samples = 10000;
inline constexpr std::size_t mixture_samples = 1000;

SuiteReport run_algebra_suite();
SuiteReport run_state_suite(const VerifyHooks& hooks = {});
SuiteReport run_dynamics_suite();

std::vector<SuiteReport> run_verify(VerifyScope scope, const VerifyHooks& hooks = {});

/// One line per check, then a summary line per suite.
void print_reports(std::ostream& os, const std::vector<SuiteReport>& reports);

/// 0 if every check passed, 1 otherwise.
int verify_exit_code(const std::vector<SuiteReport>& reports);

/// Coefficient of a generator entry as a linear form in (delta, kappa_a, kappa_b).
struct GeneratorTerm {
  int row;  // 1-based: d n_row / dt
  int col;  // 1-based: multiplies n_col
  double delta;
  double kappa_a;
  double kappa_b;
};

/// The published reference Bloch equations for Lambda at equal detuning, half convention.
const std::vector<GeneratorTerm>& reference_lambda_generator();

/// Linear coefficient matrices (d/d delta, d/d kappa_a, d/d kappa_b) of the generator.
std::array<Matrix8d, 3> generator_coefficients(Configuration config, CouplingConvention convention);

struct TableComparison {
  int entries = 0;     // nonzero entries in the union of both tables
  int mismatches = 0;  // entries whose coefficients differ
  std::vector<std::string> mismatch_list;
};

/// Entrywise comparison of the generated Lambda generator with the reference table.
/// signed_match = false compares only sparsity and absolute values.
TableComparison compare_reference_lambda(bool signed_match, double tolerance = tol::exact);

}  // namespace qutrit

#endif  // QUTRIT_VERIFY_HPP
