#include "qutrit/simulate.hpp"

#include <fstream>

#include "qutrit/format.hpp"

namespace qutrit {

Trajectory<double> simulate_trajectory(const RunConfig& cfg, Propagator method) {
  const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.dt);
  if (method == Propagator::rk4) return integrate_bloch_ode(cfg.sim, grid, cfg.dt);
  return bloch_trajectory(cfg.sim, grid);
}

int run_simulate(const RunConfig& cfg, Propagator method, std::ostream& out, std::ostream& err) {
  const Trajectory<double> tr = simulate_trajectory(cfg, method);
  const double drift = tr.max_norm_defect();
  if (!(drift <= norm_drift_limit)) {
    err << "invariant breach: max | |n|^2 - 4/3 | = " << format_double(drift) << " exceeds "
        << format_double(norm_drift_limit) << '\n';
    return exit_code::invariant_breach;
  }
  const auto rows = make_records(tr);

  auto emit = [&](std::ostream& os) {
    if (cfg.format == OutputFormat::json)
      write_json(os, cfg, rows);
    else
      write_csv(os, rows);
  };

  if (cfg.output.empty()) {
    emit(out);
    out.flush();
    if (!out) {
      err << "I/O error: failed writing to stdout\n";
      return exit_code::io_error;
    }
    return exit_code::ok;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "I/O error: cannot open '" << cfg.output << "' for writing\n";
    return exit_code::io_error;
  }
  emit(file);
  file.close();
  if (!file) {
    err << "I/O error: failed writing '" << cfg.output << "'\n";
    return exit_code::io_error;
  }
  return exit_code::ok;
}

}  // namespace qutrit
