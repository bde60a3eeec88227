#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "siegellab/errors.hpp"
#include "siegellab/report.hpp"

using namespace siegellab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(bool(f));
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(bool(f));
  f << text;
}

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("format_double survives a parse round trip") {
  for (double x : {1.0 / 3.0, 0.1, 6.02e23, 1e-300, -0.0, 2.0, 123456789.123456789}) {
    const std::string s = format_double(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(format_double(2.0) == "2");
  CHECK(format_int(-72) == "-72");
}

TEST_CASE("csv rows must match the header arity") {
  CsvTable t{{"a", "b"}, {}};
  CHECK_NOTHROW(t.add_row({"1", "2"}));
  CHECK_THROWS_AS(t.add_row({"1"}), ConfigError);
  CHECK_THROWS_AS(t.add_row({"1", "2", "3"}), ConfigError);
}

TEST_CASE("csv text carries the header and the optional stamp") {
  CsvTable t{{"x", "y"}, {}};
  t.add_row({"1", "2"});
  t.add_row({"3", "4"});
  const std::string plain = csv_to_string(t, false);
  CHECK(plain == "x,y\n1,2\n3,4\n");
  const std::string stamped = csv_to_string(t, true);
  CHECK(stamped.rfind("# generated ", 0) == 0);
  CHECK(stamped.find("x,y\n1,2\n3,4\n") != std::string::npos);
}

TEST_CASE("comment-insensitive comparison ignores stamps only") {
  CsvTable t{{"v"}, {}};
  t.add_row({"42"});
  spit("tmp_a.csv", "# generated 2001-01-01T00:00:00Z\n" + csv_to_string(t, false));
  spit("tmp_b.csv", "# generated 2002-02-02T02:02:02Z\n" + csv_to_string(t, false));
  CHECK(csv_equal_modulo_comments("tmp_a.csv", "tmp_b.csv"));

  spit("tmp_c.csv", "# generated 2002-02-02T02:02:02Z\nv\n43\n");
  CHECK(!csv_equal_modulo_comments("tmp_a.csv", "tmp_c.csv"));
  std::remove("tmp_a.csv");
  std::remove("tmp_b.csv");
  std::remove("tmp_c.csv");
}

TEST_CASE("write_csv emits the stamped form") {
  CsvTable t{{"k"}, {}};
  t.add_row({"7"});
  write_csv(t, "tmp_w.csv");
  const std::string text = slurp("tmp_w.csv");
  CHECK(text.rfind("# generated ", 0) == 0);
  CHECK(text.find("k\n7\n") != std::string::npos);
  std::remove("tmp_w.csv");
}

TEST_CASE("curve raster is a valid binary ppm with lit pixels") {
  std::vector<complex> pts;
  for (int k = 0; k < 64; ++k) pts.push_back(unit_turns(static_cast<double>(k) / 64.0));
  render_curve_ppm(pts, "tmp_curve.ppm", 64);
  const std::string img = slurp("tmp_curve.ppm");
  CHECK(img.rfind("P6\n64 64\n255\n", 0) == 0);
  CHECK(img.size() == std::string("P6\n64 64\n255\n").size() + 3u * 64u * 64u);
  size_t lit = 0;
  for (size_t i = img.size() - 3u * 64u * 64u; i < img.size(); ++i) {
    if (img[i] != 0) ++lit;
  }
  CHECK(lit > 64u);               // the circle touches many pixels
  CHECK(lit < 3u * 64u * 64u / 2); // far from fully lit
}

TEST_CASE("raster input validation") {
  const std::vector<complex> one{complex(0.0, 0.0)};
  CHECK_THROWS_AS(render_curve_ppm(one, "tmp_bad.ppm", 64), ConfigError);
  const std::vector<complex> two{complex(0.0, 0.0), complex(1.0, 0.0)};
  CHECK_THROWS_AS(render_curve_ppm(two, "tmp_bad.ppm", 8), ConfigError);
}

TEST_SUITE_END();
