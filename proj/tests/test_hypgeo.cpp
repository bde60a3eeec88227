#include <cmath>

#include "doctest.h"
#include "siegellab/hypgeo.hpp"

using namespace siegellab;

TEST_SUITE_BEGIN("hypgeo");

TEST_CASE("Lambda(1) is exactly one half") {
  CHECK(teich_modulus(1.0) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("Lambda satisfies the reciprocal product identity") {
  for (double T : {0.01, 0.3, 1.0, 4.7, 250.0}) {
    CHECK(teich_modulus(T) * teich_modulus(1.0 / T) == doctest::Approx(0.25).epsilon(1e-10));
  }
}

TEST_CASE("Lambda is increasing and obeys the exponential sandwich") {
  double prev = 0.0;
  for (double T : {0.1, 0.5, 1.0, 2.0, 10.0, 1e4}) {
    const double lam = teich_modulus(T);
    CHECK(lam > prev);
    prev = lam;
    const double e = std::exp(tau * lam);
    CHECK(T < e);
    CHECK(e <= 16.0 * (T + 1.0));
  }
}

TEST_CASE("log-argument form matches the direct form") {
  for (double T : {0.02, 1.0, 3.0, 5e6}) {
    CHECK(teich_modulus_from_log(std::log(T)) == doctest::Approx(teich_modulus(T)).epsilon(1e-12));
  }
  // Far beyond double range for T itself.
  CHECK(std::isfinite(teich_modulus_from_log(900.0)));
  CHECK(teich_modulus_from_log(900.0) > 100.0);
}

TEST_CASE("nonpositive T is rejected") {
  CHECK_THROWS_AS(teich_modulus(0.0), NonPositiveT);
  CHECK_THROWS_AS(teich_modulus(-2.0), NonPositiveT);
}

TEST_CASE("annulus core length is pi over the modulus") {
  CHECK(annulus_core_length(0.5) == doctest::Approx(tau));
  CHECK_THROWS_AS(annulus_core_length(0.0), NonPositiveModulus);
}

TEST_CASE("core geodesic result is internally consistent") {
  const QuadArcConfig cfg(ArcSegment::from_length(0.3, 2.1), ArcSegment::from_length(1.0, 0.5));
  const GeodesicResult g = core_geodesic_length(cfg);
  CHECK(g.t_value > 0.0);
  CHECK(g.log_t == doctest::Approx(std::log(g.t_value)).epsilon(1e-12));
  CHECK(g.lambda_t == doctest::Approx(teich_modulus(g.t_value)).epsilon(1e-12));
  CHECK(g.length == doctest::Approx(4.0 * pi * g.lambda_t).epsilon(1e-12));
  // The core geodesic is orthogonal to the unit circle.
  REQUIRE(!g.geodesic.is_line);
  CHECK(std::norm(g.geodesic.center) ==
        doctest::Approx(1.0 + g.geodesic.radius * g.geodesic.radius).epsilon(1e-9));
}

TEST_CASE("shrinking the inner arc loosens the separation and shortens the geodesic") {
  const ArcSegment I = ArcSegment::from_length(0.0, 2.5);
  const GeodesicResult big =
      core_geodesic_length(QuadArcConfig(I, ArcSegment::from_length(1.0, 0.8)));
  const GeodesicResult small =
      core_geodesic_length(QuadArcConfig(I, ArcSegment::from_length(1.2, 0.2)));
  CHECK(small.t_value < big.t_value);
  CHECK(small.length < big.length);
  // Hand evaluation of t = sin(|I|/2) sin(|J|/2) / (sin(|L|/2) sin(|R|/2)).
  const double t_hand = std::sin(1.25) * std::sin(0.4) / (std::sin(0.5) * std::sin(0.35));
  CHECK(big.t_value == doctest::Approx(t_hand).epsilon(1e-12));
}

TEST_CASE("hyperbolic distance in the disk") {
  CHECK(hyperbolic_distance_disk(complex(0.0, 0.0), complex(0.0, 0.0)) == 0.0);
  // d(0, x) = ln((1+x)/(1-x)) on the real axis.
  const double x = 0.6;
  CHECK(hyperbolic_distance_disk(complex(0.0, 0.0), complex(x, 0.0)) ==
        doctest::Approx(std::log((1.0 + x) / (1.0 - x))).epsilon(1e-12));
  // Symmetry and rotation invariance.
  const complex a(0.3, -0.4), b(-0.1, 0.55);
  CHECK(hyperbolic_distance_disk(a, b) == doctest::Approx(hyperbolic_distance_disk(b, a)));
  const complex rot = unit(1.1);
  CHECK(hyperbolic_distance_disk(rot * a, rot * b) ==
        doctest::Approx(hyperbolic_distance_disk(a, b)).epsilon(1e-12));
}

TEST_CASE("punctured density ratio is at least 1 and blows up at the puncture") {
  const complex y(0.2, 0.1);
  CHECK(punctured_density_ratio(complex(-0.4, 0.3), y) >= 1.0);
  CHECK(punctured_density_ratio(y + complex(1e-6, 0.0), y) > 10.0);
}

TEST_CASE("slit sphere uniformizer round trips") {
  const ArcSegment gap = ArcSegment::from_length(2.0, 1.2);
  const SlitSphere W(gap);
  for (complex z : {complex(0.0, 0.0), complex(0.3, -0.6), complex(-1.5, 0.8)}) {
    REQUIRE(W.in_domain(z));
    const complex w = W.to_disk(z);
    CHECK(std::abs(w) < 1.0);
    CHECK(std::abs(W.from_disk(w) - z) < 1e-9);
  }
}

TEST_CASE("slit sphere keeps the gate arc and removes its complement") {
  const ArcSegment gate = ArcSegment::from_length(2.0, 1.2);
  const SlitSphere W(gate);
  CHECK(W.in_domain(unit(2.5)));    // strictly inside the gate
  CHECK(!W.in_domain(unit(0.5)));   // on the complementary slit
  CHECK(!W.in_domain(unit(2.0)));   // gate endpoints belong to the slit
}

TEST_CASE("both endpoint assignments give the same metric") {
  const ArcSegment gap = ArcSegment::from_length(5.5, 0.9);
  const SlitSphere W1(gap, false), W2(gap, true);
  for (complex z : {complex(0.1, 0.2), complex(-0.4, -0.1)}) {
    CHECK(W1.density(z) == doctest::Approx(W2.density(z)).epsilon(1e-9));
  }
}

TEST_CASE("slit sphere distance is symmetric and vanishes on the diagonal") {
  const SlitSphere W(ArcSegment::from_length(1.0, 0.8));
  const complex a(0.2, 0.3), b(-0.5, 0.05);
  CHECK(W.distance(a, b) == doctest::Approx(W.distance(b, a)).epsilon(1e-9));
  CHECK(W.distance(a, a) < 1e-12);
}

TEST_CASE("derivative accompanies the uniformizer") {
  const SlitSphere W(ArcSegment::from_length(0.3, 1.0));
  const complex z(0.15, -0.25), h(1e-6, 0.0);
  const auto [w, dw] = W.to_disk_with_derivative(z);
  CHECK(std::abs(w - W.to_disk(z)) < 1e-14);
  const complex fd = (W.to_disk(z + h) - W.to_disk(z - h)) / (2.0 * h);
  CHECK(std::abs(dw - fd) < 1e-5 * (1.0 + std::abs(dw)));
}

TEST_CASE("punctured ratio and key domain distance are positive") {
  const SlitSphere W(ArcSegment::from_length(4.0, 1.1));
  CHECK(W.punctured_ratio(complex(0.4, 0.2)) >= 1.0);
  CHECK(W.distance_to_key_domain(1024) > 0.0);
}

TEST_CASE("density ratio scan grows with the arc and the fit bounds it") {
  const double small = density_ratio_bound_scan(ArcSegment::from_length(0.0, 0.4), 400);
  const double large = density_ratio_bound_scan(ArcSegment::from_length(0.0, 2.0), 400);
  CHECK(small >= 1.0);
  CHECK(large > small);

  const DensityFit fit = density_ratio_bound_fit({0.3, 0.6, 1.2, 2.0}, 400);
  REQUIRE(fit.rows.size() == 4);
  CHECK(fit.c_fit > 0.0);
  for (const DensityFitRow& row : fit.rows) {
    CHECK(std::log(row.max_ratio) <= fit.c_fit * row.arc_length + 1e-12);
  }
}

TEST_CASE("round annulus modulus and the cut annulus bound") {
  const RoundAnnulus A{1.0, std::exp(tau)};
  CHECK(A.modulus() == doctest::Approx(1.0).epsilon(1e-12));

  // No obstructing points: the widest subannulus is A itself.
  CHECK(cut_annulus(A, {}).modulus() == doctest::Approx(A.modulus()).epsilon(1e-12));

  // One point: mod(A) <= 2 mod(B).
  const std::vector<complex> Z{complex(3.0, 0.0)};
  const RoundAnnulus B = cut_annulus(A, Z);
  CHECK(B.inner_radius >= A.inner_radius);
  CHECK(B.outer_radius <= A.outer_radius);
  CHECK(A.modulus() <= 2.0 * B.modulus() + 1e-12);
}

TEST_SUITE_END();
