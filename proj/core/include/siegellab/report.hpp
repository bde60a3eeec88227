#pragma once

#include <string>
#include <vector>

#include "siegellab/numeric.hpp"

namespace siegellab {

/// 17 significant digits, round-trip safe for double.
std::string format_double(double x);
std::string format_int(long long x);

/// Header row plus string cells; all emitters funnel through this.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Throws ConfigError when the cell count does not match the header.
  void add_row(std::vector<std::string> cells);
};

/// Comma-separated UTF-8 text. With stamp, the first line is a
/// `# generated <utc time>` comment that byte comparisons must skip.
std::string csv_to_string(const CsvTable& table, bool stamp);

/// Writes the stamped form of csv_to_string to path.
void write_csv(const CsvTable& table, const std::string& path);

/// Byte-compares two CSV files ignoring `#`-prefixed comment lines.
bool csv_equal_modulo_comments(const std::string& path_a, const std::string& path_b);

/// Rasterizes the closed curve into a size x size binary P6 image spanning
/// the curve bounding box padded by 5% per side: white curve on black.
void render_curve_ppm(const std::vector<complex>& points, const std::string& path,
                      int size = 1024);

}  // namespace siegellab
