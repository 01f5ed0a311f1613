#include "ugsb/dynamics/trajectory_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "ugsb/errors.hpp"

namespace ugsb::dynamics {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const TimeSeries& series) {
  for (const auto& line : series.header) os << "# " << line << '\n';
  for (std::size_t c = 0; c < series.columns.size(); ++c) os << (c ? "," : "") << series.columns[c];
  os << '\n';
  for (const auto& row : series.rows) {
    if (row.size() != series.columns.size()) throw ConfigurationError("row width does not match columns");
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const TimeSeries& series) {
  std::ofstream os(path);
  if (!os) throw ConfigurationError("cannot open '" + path + "' for writing");
  write_csv(os, series);
}

}  // namespace ugsb::dynamics
