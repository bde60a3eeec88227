#include <cmath>

#include "doctest.h"
#include "siegellab/circlegeo.hpp"
#include "siegellab/numeric.hpp"

using namespace siegellab;

TEST_SUITE_BEGIN("circlegeo");

TEST_CASE("arc segments normalize start and measure length anticlockwise") {
  const ArcSegment a(0.5, 1.7);
  CHECK(a.start() == doctest::Approx(0.5));
  CHECK(a.length() == doctest::Approx(1.2));

  const ArcSegment wrap(6.0, 1.0);  // crosses angle 0
  CHECK(wrap.length() == doctest::Approx(1.0 + tau - 6.0));
  CHECK(wrap.contains_angle(0.0));
  CHECK(wrap.contains_angle(6.1));
  CHECK(!wrap.contains_angle(3.0));
}

TEST_CASE("from_length and rotated keep the measure") {
  const ArcSegment a = ArcSegment::from_length(1.0, 2.5);
  CHECK(a.length() == doctest::Approx(2.5));
  const ArcSegment b = a.rotated(4.0);
  CHECK(b.length() == doctest::Approx(2.5));
  CHECK(b.start() == doctest::Approx(wrap_angle(5.0)));
}

TEST_CASE("degenerate arcs are rejected") {
  CHECK_THROWS_AS(ArcSegment::from_length(0.0, 0.0), DegenerateArc);
  CHECK_THROWS_AS(ArcSegment::from_length(0.0, tau), DegenerateArc);
}

TEST_CASE("moebius apply, inverse, and compose agree") {
  const MoebiusMap m{complex(2.0, 1.0), complex(0.5, 0.0), complex(0.0, 0.3), complex(1.0, 0.0)};
  const MoebiusMap mi = m.inverse();
  for (complex z : {complex(0.2, 0.1), complex(-0.7, 0.4), complex(1.5, -2.0)}) {
    CHECK(std::abs(mi.apply(m.apply(z)) - z) < 1e-12);
  }
  const MoebiusMap id = m.compose(mi);
  for (complex z : {complex(0.3, -0.2), complex(2.0, 2.0)}) {
    CHECK(std::abs(id.apply(z) - z) < 1e-12);
  }
}

TEST_CASE("to_zero_one_inf hits the three targets") {
  const complex z1(0.3, 0.1), z2(-0.5, 0.7), z3(1.2, -0.4);
  const MoebiusMap m = MoebiusMap::to_zero_one_inf(z1, z2, z3);
  CHECK(std::abs(m.apply(z1)) < 1e-12);
  CHECK(std::abs(m.apply(z2) - 1.0) < 1e-12);
  CHECK(std::abs(m.c * z3 + m.d) < 1e-12);  // z3 maps to infinity
}

TEST_CASE("disk preserving moebius sends z to 0 and fixes the circle") {
  const complex z(0.4, -0.3);
  const MoebiusMap g = disk_preserving_moebius(z);
  CHECK(std::abs(g.apply(z)) < 1e-14);
  for (double t : {0.1, 2.0, 4.5}) {
    CHECK(std::abs(std::abs(g.apply(unit(t))) - 1.0) < 1e-12);
  }
}

TEST_CASE("arc_split produces the two side components in order") {
  const ArcSegment I = ArcSegment::from_length(1.0, 3.0);
  const ArcSegment J = ArcSegment::from_length(1.8, 0.7);
  const auto [L, R] = arc_split(I, J);
  CHECK(L.start() == doctest::Approx(I.start()));
  CHECK(L.length() == doctest::Approx(0.8));
  CHECK(R.length() == doctest::Approx(3.0 - 0.7 - 0.8));
  CHECK(L.length() + J.length() + R.length() == doctest::Approx(I.length()).epsilon(1e-12));
}

TEST_CASE("arc_split requires proper containment") {
  const ArcSegment I = ArcSegment::from_length(0.0, 2.0);
  CHECK_THROWS_AS(arc_split(I, ArcSegment::from_length(0.0, 1.0)), NotProperlyContained);
  CHECK_THROWS_AS(arc_split(I, ArcSegment::from_length(3.0, 0.5)), NotProperlyContained);
}

TEST_CASE("cross ratio of the symmetric configuration") {
  // |I| = 4s, |J| = |L| = |R| ... take I of length 3h with J the middle
  // third: C = (3h * h) / (h * h) = 3.
  const ArcSegment I = ArcSegment::from_length(0.2, 1.5);
  const ArcSegment J = ArcSegment::from_length(0.7, 0.5);
  CHECK(cross_ratio_config(QuadArcConfig(I, J)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("cross ratio is rotation invariant") {
  const ArcSegment I = ArcSegment::from_length(0.3, 2.4);
  const ArcSegment J = ArcSegment::from_length(1.1, 0.6);
  const double base = cross_ratio_config(QuadArcConfig(I, J));
  for (double phi : {0.7, 2.9, 5.5}) {
    const double rot = cross_ratio_config(QuadArcConfig(I.rotated(phi), J.rotated(phi)));
    CHECK(rot == doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("mu at the origin is the arc length") {
  const ArcSegment I = ArcSegment::from_length(2.0, 1.3);
  CHECK(mu_z(complex(0.0, 0.0), I) == doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("mu grows toward the arc and shrinks away from it") {
  const ArcSegment I = ArcSegment::from_length(-0.5, 1.0);  // around angle 0
  const double toward = mu_z(complex(0.5, 0.0), I);
  const double away = mu_z(complex(-0.5, 0.0), I);
  CHECK(toward > I.length());
  CHECK(away < I.length());
}

TEST_CASE("shadow: on-circle points use membership, interior points use mu") {
  const ArcSegment I = ArcSegment::from_length(0.0, 1.0);
  CHECK(shadow(unit(0.5), I));
  CHECK(!shadow(unit(3.0), I));
  CHECK(shadow(complex(0.9, 0.0), ArcSegment::from_length(-0.3, 0.6)));
  CHECK(!shadow(complex(0.0, 0.0), ArcSegment::from_length(0.0, 2.0)));  // mu = 2 < 2pi/3
}

TEST_CASE("circline through collinear points is a line") {
  const Circline c = circline_through(complex(0.0, 0.0), complex(1.0, 1.0), complex(2.0, 2.0));
  CHECK(c.is_line);
}

TEST_CASE("circline through circle points recovers center and radius") {
  const complex center(0.3, -0.2);
  const double r = 1.7;
  const Circline c = circline_through(center + r * unit(0.1), center + r * unit(2.0),
                                      center + r * unit(4.2));
  REQUIRE(!c.is_line);
  CHECK(std::abs(c.center - center) < 1e-12);
  CHECK(c.radius == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("key domain boundary is orthogonal to the unit circle") {
  const ArcSegment I = ArcSegment::from_length(0.4, 1.1);
  const KeyDomain D(I);
  REQUIRE(!D.boundary().is_line);
  // Orthogonality: |c|^2 = 1 + r^2 for the boundary circle.
  const double c2 = std::norm(D.boundary().center);
  CHECK(c2 == doctest::Approx(1.0 + D.boundary().radius * D.boundary().radius).epsilon(1e-10));
}

TEST_CASE("key domain contains the arc midpoint region and not the far side") {
  const ArcSegment I = ArcSegment::from_length(1.0, 1.4);
  const KeyDomain D(I);
  CHECK(D.contains(0.99 * I.point_mid()));
  CHECK(!D.contains(-0.5 * I.point_mid()));
  CHECK(!D.contains(complex(0.0, 0.0)));
}

TEST_CASE("half circle key domain is a half plane") {
  const ArcSegment I = ArcSegment::from_length(0.0, pi);
  const KeyDomain D(I);
  CHECK(D.boundary().is_line);
  CHECK(D.contains(complex(0.5, 0.5)));    // toward the arc side
  CHECK(!D.contains(complex(0.5, -0.5)));
}

TEST_SUITE_END();
