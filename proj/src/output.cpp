#include "qutrit/output.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qutrit/format.hpp"

namespace qutrit {

const std::array<std::string, record_width>& record_columns() {
  static const std::array<std::string, record_width> cols = {
      "t",   "n1",  "n2",  "n3",  "n4",  "n5",  "n6", "n7", "n8",   "dn1",
      "dn2", "dn3", "dn4", "dn5", "dn6", "dn7", "dn8", "s4", "s2", "norm2"};
  return cols;
}

std::string csv_header() {
  std::string h;
  for (const auto& c : record_columns()) h += (h.empty() ? "" : ",") + c;
  return h;
}

std::vector<TrajectoryRecord> make_records(const Trajectory<double>& tr) {
  std::vector<TrajectoryRecord> rows(tr.size());
  for (std::size_t i = 0; i < tr.size(); ++i) {
    TrajectoryRecord& r = rows[i];
    r[0] = tr.times[i];
    for (int k = 0; k < 8; ++k) {
      r[static_cast<std::size_t>(1 + k)] = tr.bloch[i](k);
      r[static_cast<std::size_t>(9 + k)] = tr.bloch_dot[i](k);
    }
    r[17] = tr.sector4_norm[i];
    r[18] = tr.sector2_norm[i];
    r[19] = tr.bloch[i].squaredNorm();
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<TrajectoryRecord>& rows) {
  os << csv_header() << '\n';
  std::string line;
  for (const auto& r : rows) {
    line.clear();
    for (std::size_t j = 0; j < record_width; ++j) {
      if (j) line += ',';
      line += format_double(r[j]);
    }
    line += '\n';
    os << line;
  }
}

void write_json(std::ostream& os, const RunConfig& cfg, const std::vector<TrajectoryRecord>& rows) {
  const auto& c = cfg.sim.c0.amplitudes();
  nlohmann::ordered_json meta;
  meta["config"] = to_string(cfg.sim.config);
  meta["kappa_a"] = cfg.sim.kappa_a;
  meta["kappa_b"] = cfg.sim.kappa_b;
  meta["delta"] = cfg.sim.delta;
  meta["c0_re"] = {c(0).real(), c(1).real(), c(2).real()};
  meta["c0_im"] = {c(0).imag(), c(1).imag(), c(2).imag()};
  meta["convention"] = to_string(cfg.sim.convention);
  meta["t_max"] = cfg.t_max;
  meta["dt"] = cfg.dt;
  meta["emit"] = to_string(cfg.emit);
  meta["format"] = to_string(cfg.format);
  meta["output"] = cfg.output;

  // Rows are written by hand so every number carries exactly 17 significant digits.
  const auto& cols = record_columns();
  os << "{\"meta\":" << meta.dump() << ",\"rows\":[";
  std::string line;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    line = i ? ",\n{" : "\n{";
    for (std::size_t j = 0; j < record_width; ++j) {
      if (j) line += ',';
      line += '"' + cols[j] + "\":" + format_double(rows[i][j]);
    }
    line += '}';
    os << line;
  }
  os << "\n]}\n";
}

std::vector<TrajectoryRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header()) throw std::runtime_error("read_csv: unexpected header");
  std::vector<TrajectoryRecord> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    TrajectoryRecord r{};
    std::istringstream fields(line);
    std::string field;
    std::size_t j = 0;
    while (std::getline(fields, field, ',')) {
      if (j >= record_width) throw std::runtime_error("read_csv: too many fields");
      std::size_t used = 0;
      r[j++] = std::stod(field, &used);
      if (used != field.size()) throw std::runtime_error("read_csv: bad number '" + field + "'");
    }
    if (j != record_width) throw std::runtime_error("read_csv: expected " + std::to_string(record_width) + " fields");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qutrit
