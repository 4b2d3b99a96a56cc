#ifndef QUTRIT_SIMULATE_HPP
#define QUTRIT_SIMULATE_HPP

#include <ostream>

#include "qutrit/config.hpp"
#include "qutrit/output.hpp"

namespace qutrit {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int io_error = 2;
inline constexpr int invariant_breach = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

enum class Propagator { exact, rk4 };

/// Largest tolerated | |n|^2 - 4/3 | along a run.
inline constexpr double norm_drift_limit = 1e-6;

Trajectory<double> simulate_trajectory(const RunConfig& cfg, Propagator method = Propagator::exact);

/// Runs cfg, writes cfg.output (stdout if empty) and returns an exit code.
/// Diagnostics go to err. Nothing is written when the run breaches the norm invariant.
int run_simulate(const RunConfig& cfg, Propagator method, std::ostream& out, std::ostream& err);

}  // namespace qutrit

#endif  // QUTRIT_SIMULATE_HPP
