#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ugsb::dynamics {

/// Rows of doubles under named columns, written as CSV behind a block of
/// '#'-prefixed header lines.
struct TimeSeries {
  std::vector<std::string> header;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const TimeSeries& series);
void write_csv_file(const std::string& path, const TimeSeries& series);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

}  // namespace ugsb::dynamics
