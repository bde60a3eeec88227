#include <cmath>
#include <vector>

#include "doctest.h"
#include "siegellab/linearize.hpp"

using namespace siegellab;

namespace {

EmpiricalCircleMeasure uniform_measure(int n) {
  std::vector<double> angles(n);
  for (int k = 0; k < n; ++k) angles[k] = tau * static_cast<double>(k) / n;
  return EmpiricalCircleMeasure(std::move(angles));
}

}  // namespace

TEST_SUITE_BEGIN("linearize");

TEST_CASE("orbit measure has uniform weights summing to one") {
  const RigidRotation rot(0.3819660112501051);
  const EmpiricalCircleMeasure mu = EmpiricalCircleMeasure::from_orbit(rot, 512);
  CHECK(mu.size() == 512);
  double total = 0.0;
  for (double w : mu.weights()) {
    CHECK(w == doctest::Approx(1.0 / 512.0));
    total += w;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("arc mass of the uniform measure is the normalized length") {
  const EmpiricalCircleMeasure mu = uniform_measure(4096);
  for (double len : {0.5, 1.7, 4.0}) {
    const double mass = mu.mass_of_arc(ArcSegment::from_length(0.123, len));
    CHECK(std::abs(mass - len / tau) <= 2.5 / 4096.0);  // one-atom quantization per endpoint
  }
}

TEST_CASE("uniform barycenter is the origin and the field vanishes there") {
  const EmpiricalCircleMeasure mu = uniform_measure(1000);
  CHECK(std::abs(de_field(mu, complex(0.0, 0.0))) < 1e-12);
  CHECK(std::abs(barycenter(mu)) < 1e-12);
}

TEST_CASE("point-mass-dominated measure pulls the barycenter toward the atom") {
  std::vector<double> angles{0.0, 0.0, 0.0, pi};
  const EmpiricalCircleMeasure mu(std::move(angles));
  const complex b = barycenter(mu);
  CHECK(b.real() > 0.3);
  CHECK(std::abs(b.imag()) < 1e-9);
  CHECK(std::abs(de_field(mu, b)) < 1e-10);
}

TEST_CASE("barycenter is moebius equivariant") {
  const EmpiricalCircleMeasure mu = EmpiricalCircleMeasure::from_orbit(RigidRotation(0.3819660112501051), 600);
  const MoebiusMap g = disk_preserving_moebius(complex(-0.35, 0.2)).inverse();
  const complex direct = barycenter(mu.pushed_forward(g), 1e-13);
  const complex mapped = g.apply(barycenter(mu, 1e-13));
  CHECK(std::abs(direct - mapped) < 1e-8);
}

TEST_CASE("identity linearization table reproduces the identity exactly") {
  const LinearizationTable table = LinearizationTable::identity(0.3819660112501051, 256);
  for (double a : {0.0, 0.1, 0.55, 0.93}) {
    CHECK(table.h_turns(a) == a);  // interpolating zero offsets is exact
  }
  CHECK(qs_constant(table) == 1.0);
}

TEST_CASE("table nodes reproduce the conjugacy on the rigid rotation") {
  const double theta = 0.3819660112501051;
  const LinearizationTable table = LinearizationTable::build(RigidRotation(theta), theta, 512);
  CHECK(table.size() == 512);
  // Orbit of the rotation is already linear: h is the identity on nodes.
  for (double a : {0.0, 0.25, 0.6}) {
    CHECK(table.h_turns(a) == doctest::Approx(a).epsilon(1e-12));
  }
  CHECK(qs_constant(table) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(table.max_target_gap() > 0.0);
}

TEST_CASE("h_point wraps h_turns onto the circle") {
  const LinearizationTable table = LinearizationTable::identity(0.3819660112501051, 64);
  const complex z = unit_turns(0.37);
  CHECK(std::abs(table.h_point(z) - z) < 1e-12);
}

TEST_CASE("centering the tuned cubic shrinks the orbit mean") {
  const RotationNumber golden = golden_mean();
  const BlaschkeProduct base = BlaschkeProduct::douady_ghys_cubic();
  const TuneResult tuned = tune_to_rotation(base, golden, 1e-7, 1 << 18);
  const BlaschkeProduct B = base.with_prefactor(tuned.t);

  const int N = 1 << 13;
  const double before =
      std::abs(EmpiricalCircleMeasure::from_orbit(CircleLift(B), N).mean_point());
  const CenterResult res = center(B, N);
  CHECK(std::abs(res.z_b) > 0.1);        // the cubic orbit is visibly lopsided
  CHECK(res.clt_residual < 0.05 * before);
  CHECK(std::abs(res.g.apply(res.z_b)) < 1e-12);
  // Conjugation preserves the rotation number.
  const double rho = rotation_number(CircleLift(res.product), 1 << 18);
  CHECK(std::abs(rho - golden.value) < 1e-4);
}

TEST_CASE("swiatek scan of the rigid rotation is an isometry family") {
  const RotationNumber golden = golden_mean();
  const SwiatekScan scan = swiatek_scan(RigidRotation(golden.value), golden, 6, 0.0);
  CHECK(scan.n == 6);
  CHECK(scan.q_n == 13);
  CHECK(scan.k_max == 5);  // q_4
  REQUIRE(scan.steps.size() == 5);
  for (const SwiatekStep& s : scan.steps) {
    CHECK(s.outer.length() == doctest::Approx(scan.steps[0].outer.length()).epsilon(1e-12));
    CHECK(s.length == doctest::Approx(scan.steps[0].length).epsilon(1e-9));
  }
  CHECK(scan.max_length_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(scan.shadow_steps == 0);
}

TEST_CASE("df ratios of the rigid golden rotation hit the golden scaling") {
  const RotationNumber golden = golden_mean();
  const DfRatios r = df_ratios(RigidRotation(golden.value), golden, 5, 7, 16);
  REQUIRE(!r.rows.empty());
  for (const DfRow& row : r.rows) {
    CHECK(row.cp1 == doctest::Approx(1.0).epsilon(1e-9));          // symmetric returns
    CHECK(row.cp2 == doctest::Approx(golden.value).epsilon(1e-9)); // <q_{n+1}t>/<q_n t>
  }
  CHECK(r.j_empirical == doctest::Approx(1.0 / golden.value).epsilon(1e-9));
}

TEST_CASE("centered arc bound holds for the uniform measure") {
  const EmpiricalCircleMeasure mu = uniform_measure(4096);
  CHECK(centered_arc_bound_check(mu, 100, 42) == 0);
}

TEST_CASE("arc cover detection") {
  std::vector<ArcSegment> arcs;
  for (int k = 0; k < 6; ++k) {
    arcs.push_back(ArcSegment::from_length(k * tau / 6.0 - 0.05, tau / 6.0 + 0.1));
  }
  CHECK(arcs_cover_circle(arcs));
  arcs.pop_back();
  CHECK(!arcs_cover_circle(arcs));
}

TEST_CASE("return arc pullbacks cover the circle for the rigid rotation") {
  const RotationNumber golden = golden_mean();
  const std::vector<ArcSegment> arcs =
      return_arc_pullbacks(RigidRotation(golden.value), golden, 5, 0.0);
  CHECK(arcs.size() == 8 + 13);  // q_5 + q_6
  CHECK(arcs_cover_circle(arcs));
}

TEST_SUITE_END();
