#include "siegellab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "siegellab/errors.hpp"

namespace siegellab {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_int(long long x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", x);
  return buf;
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size()) {
    throw ConfigError("csv row has " + std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(columns.size()));
  }
  rows.push_back(std::move(cells));
}

namespace {

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void append_joined(std::string& out, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string csv_to_string(const CsvTable& table, bool stamp) {
  std::string out;
  if (stamp) out += "# generated " + utc_now() + "\n";
  append_joined(out, table.columns);
  for (const auto& row : table.rows) append_joined(out, row);
  return out;
}

void write_csv(const CsvTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + path + " for writing");
  f << csv_to_string(table, true);
  if (!f) throw ConfigError("write failed: " + path);
}

namespace {

std::string strip_comment_lines(const std::string& text) {
  std::string out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (pos == end || text[pos] != '#') {
      out.append(text, pos, end - pos);
      out += '\n';
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace

bool csv_equal_modulo_comments(const std::string& path_a, const std::string& path_b) {
  auto slurp = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  return strip_comment_lines(slurp(path_a)) == strip_comment_lines(slurp(path_b));
}

void render_curve_ppm(const std::vector<complex>& points, const std::string& path, int size) {
  if (points.size() < 2) throw ConfigError("curve raster needs at least 2 points");
  if (size < 16) throw ConfigError("raster size too small");

  double x_lo = points[0].real(), x_hi = x_lo;
  double y_lo = points[0].imag(), y_hi = y_lo;
  for (const complex& p : points) {
    x_lo = std::min(x_lo, p.real());
    x_hi = std::max(x_hi, p.real());
    y_lo = std::min(y_lo, p.imag());
    y_hi = std::max(y_hi, p.imag());
  }
  double span_x = x_hi - x_lo, span_y = y_hi - y_lo;
  if (span_x <= 0.0) span_x = 1.0;
  if (span_y <= 0.0) span_y = 1.0;
  x_lo -= 0.05 * span_x;
  x_hi += 0.05 * span_x;
  y_lo -= 0.05 * span_y;
  y_hi += 0.05 * span_y;

  std::vector<std::uint8_t> img(static_cast<size_t>(size) * size, 0);
  auto to_px = [&](const complex& p, double& cx, double& cy) {
    cx = (p.real() - x_lo) / (x_hi - x_lo) * (size - 1);
    cy = (y_hi - p.imag()) / (y_hi - y_lo) * (size - 1);  // imag axis points up
  };
  auto plot = [&](double cx, double cy) {
    const int ix = static_cast<int>(std::lround(cx));
    const int iy = static_cast<int>(std::lround(cy));
    if (ix >= 0 && ix < size && iy >= 0 && iy < size) {
      img[static_cast<size_t>(iy) * size + ix] = 255;
    }
  };

  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i) {
    double ax, ay, bx, by;
    to_px(points[i], ax, ay);
    to_px(points[(i + 1) % n], bx, by);
    const int steps = 1 + static_cast<int>(std::max(std::abs(bx - ax), std::abs(by - ay)));
    for (int s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      plot(ax + t * (bx - ax), ay + t * (by - ay));
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + path + " for writing");
  f << "P6\n" << size << " " << size << "\n255\n";
  std::vector<std::uint8_t> rgb(static_cast<size_t>(size) * size * 3);
  for (size_t i = 0; i < img.size(); ++i) {
    rgb[3 * i] = rgb[3 * i + 1] = rgb[3 * i + 2] = img[i];
  }
  f.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
  if (!f) throw ConfigError("write failed: " + path);
}

}  // namespace siegellab
