#ifndef QUTRIT_OUTPUT_HPP
#define QUTRIT_OUTPUT_HPP

// Trajectory export. One row per grid point:
//   t, n1..n8, dn1..dn8, s4, s2, norm2
// CSV is comma-separated with LF endings; JSON is {"meta": {...}, "rows": [...]}
// with row keys equal to the CSV header tokens.

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "qutrit/config.hpp"
#include "qutrit/dynamics.hpp"

namespace qutrit {

inline constexpr std::size_t record_width = 20;

/// Column names in output order.
const std::array<std::string, record_width>& record_columns();

/// The CSV header line without the trailing newline.
std::string csv_header();

using TrajectoryRecord = std::array<double, record_width>;

std::vector<TrajectoryRecord> make_records(const Trajectory<double>& tr);

void write_csv(std::ostream& os, const std::vector<TrajectoryRecord>& rows);
void write_json(std::ostream& os, const RunConfig& cfg, const std::vector<TrajectoryRecord>& rows);

/// Parsed CSV produced by write_csv; throws std::runtime_error on a malformed file.
std::vector<TrajectoryRecord> read_csv(std::istream& is);

}  // namespace qutrit

#endif  // QUTRIT_OUTPUT_HPP
