#include <cmath>
#include <vector>

#include "doctest.h"
#include "siegellab/blaschke.hpp"
#include "siegellab/cfrac.hpp"
#include "siegellab/numeric.hpp"

using namespace siegellab;

TEST_SUITE_BEGIN("blaschke");

TEST_CASE("constructor enforces the product shape") {
  const complex lam = unit(0.7);
  CHECK_THROWS_AS(BlaschkeProduct(lam, {complex(0.1, 0.0)}, {}), ConfigError);
  CHECK_THROWS_AS(BlaschkeProduct(lam, {complex(0.1, 0.0), complex(0.2, 0.0)},
                                  {complex(2.0, 0.0), complex(3.0, 0.0)}),
                  ConfigError);
  CHECK_THROWS_AS(
      BlaschkeProduct(lam, {complex(0.1, 0.0), complex(0.9999999999, 0.0)}, {complex(2.0, 0.0)}),
      ConfigError);
  CHECK_THROWS_AS(BlaschkeProduct(complex(1.1, 0.0), {complex(0.0, 0.0), complex(0.0, 0.0)},
                                  {complex(2.0, 0.0)}),
                  ConfigError);
}

TEST_CASE("douady-ghys cubic preserves the circle and fixes lambda at z = 1") {
  const BlaschkeProduct B = BlaschkeProduct::douady_ghys_cubic(0.13);
  CHECK(B.degree() == 2);
  CHECK(B.total_degree() == 3);
  for (double t : {0.3, 1.9, 5.1}) {
    CHECK(std::abs(std::abs(B.eval(unit(t))) - 1.0) < 1e-12);
  }
  CHECK(std::abs(B.eval(complex(1.0, 0.0)) - B.lambda()) < 1e-12);
}

TEST_CASE("douady-ghys cubic is the one-parameter herman form") {
  const complex lam = unit_turns(0.23);
  const BlaschkeProduct dg = BlaschkeProduct::douady_ghys_cubic(0.23);
  const BlaschkeProduct hf = BlaschkeProduct::herman_form(lam, 2, {complex(1.0 / 3.0, 0.0)});
  for (double t : {0.1, 0.77, 0.45}) {
    const complex z = unit_turns(t);
    CHECK(std::abs(dg.eval(z) - hf.eval(z)) < 1e-12);
  }
}

TEST_CASE("herman form matches the zz(1-conj(a)z)/(z-a) formula") {
  const complex lam = unit(1.3);
  const complex a(0.4, 0.25);
  const BlaschkeProduct B = BlaschkeProduct::herman_form(lam, 2, {a});
  for (double t : {0.2, 2.6, 4.4}) {
    const complex z = unit(t);
    const complex direct = lam * z * z * (1.0 - std::conj(a) * z) / (z - a);
    CHECK(std::abs(B.eval(z) - direct) < 1e-12);
  }
}

TEST_CASE("with_prefactor multiplies lambda and keeps the zeros") {
  const BlaschkeProduct B = BlaschkeProduct::douady_ghys_cubic();
  const BlaschkeProduct Bt = B.with_prefactor(0.31);
  CHECK(std::abs(Bt.lambda() - unit_turns(0.31) * B.lambda()) < 1e-15);
  CHECK(Bt.interior_zeros() == B.interior_zeros());
  CHECK(Bt.exterior_zeros() == B.exterior_zeros());
}

TEST_CASE("evaluation at a pole is rejected") {
  const complex a(0.4, 0.25);
  const BlaschkeProduct B = BlaschkeProduct::herman_form(unit(0.4), 2, {a});
  CHECK_THROWS_AS(B.eval(a), AtPole);  // herman zero at q = 1/conj(a): pole at a
}

TEST_CASE("circle lift is monotone with winding one") {
  const CircleLift lift(BlaschkeProduct::douady_ghys_cubic(0.4));
  double prev = lift.lift(0.0);
  CHECK(lift.lift(1.0) == doctest::Approx(prev + 1.0).epsilon(1e-12));
  for (int k = 1; k <= 200; ++k) {
    const double x = static_cast<double>(k) / 200.0;
    const double y = lift.lift(x);
    CHECK(y >= prev - 1e-12);
    prev = y;
  }
}

TEST_CASE("lift and inverse round trip") {
  const CircleLift lift(BlaschkeProduct::douady_ghys_cubic(0.27));
  for (double x : {0.05, 0.33, 0.71, 0.98}) {
    CHECK(lift.lift_inverse(lift.lift(x)) == doctest::Approx(x).epsilon(1e-8));
  }
}

TEST_CASE("untuned cubic has a critical angle at zero") {
  const CircleLift lift((BlaschkeProduct::douady_ghys_cubic()));
  REQUIRE(lift.critical_angles().size() == 1);
  CHECK(std::abs(lift.critical_angles()[0]) < 1e-6);
  CHECK(lift.min_angular_derivative() < 1e-6);
}

TEST_CASE("rotation number of the rigid rotation converges at rate 1/n") {
  const RigidRotation rot(0.38196601125010515);
  const double est = rotation_number(rot, 100000);
  CHECK(std::abs(est - rot.rho()) <= 1.0 / 100000.0);
}

TEST_CASE("shifted lift adds a constant") {
  const RigidRotation rot(0.25);
  const ShiftedLift shifted(rot, 0.1);
  CHECK(shifted.lift(0.2) == doctest::Approx(0.55));
  CHECK(shifted.lift_inverse(0.55) == doctest::Approx(0.2));
}

TEST_CASE("tune drives the cubic to the golden rotation number") {
  const RotationNumber golden = golden_mean();
  const BlaschkeProduct base = BlaschkeProduct::douady_ghys_cubic();
  const TuneResult res = tune_to_rotation(base, golden, 1e-6, 1 << 18);
  CHECK(std::abs(res.rho_hat - golden.value) < 1e-5);
  const CircleLift lift(base.with_prefactor(res.t));
  CHECK(std::abs(rotation_number(lift, 1 << 18) - golden.value) < 1e-5);
}

TEST_CASE("pullback of an arc under the rigid rotation is a rotation") {
  const RigidRotation rot(0.3);
  const ArcSegment I = ArcSegment::from_length(1.0, 0.8);
  const ArcSegment back = pullback_arc(rot, I, 2);
  CHECK(back.length() == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(back.start() == doctest::Approx(wrap_angle(1.0 - 2.0 * 0.3 * tau)).epsilon(1e-9));
}

TEST_CASE("pullback then forward iteration restores the arc endpoints") {
  const CircleLift lift(BlaschkeProduct::douady_ghys_cubic(0.35));
  const ArcSegment I = ArcSegment::from_length(2.0, 0.5);
  const ArcSegment back = pullback_arc(lift, I, 3);
  double s = back.start() / tau, e = (back.start() + back.length()) / tau;
  for (int k = 0; k < 3; ++k) {
    s = lift.lift(s);
    e = lift.lift(e);
  }
  CHECK(wrap_angle(s * tau) == doctest::Approx(I.start()).epsilon(1e-6));
  CHECK(wrap_angle(e * tau) == doctest::Approx(wrap_angle(I.end())).epsilon(1e-6));
}

TEST_CASE("critical values include lambda for the touching cubic") {
  const BlaschkeProduct B = BlaschkeProduct::douady_ghys_cubic(0.17);
  const std::vector<complex> cv = critical_values(B);
  CHECK(cv.size() <= 4);  // at most 2m - 2
  double best = 1e9;
  for (complex v : cv) best = std::min(best, std::abs(v - B.lambda()));
  CHECK(best < 1e-6);  // B(1) = lambda and z = 1 is critical
}

TEST_CASE("preimages solve B(z) = target with the full count") {
  const BlaschkeProduct B = BlaschkeProduct::douady_ghys_cubic(0.09);
  for (complex target : {complex(0.2, -0.1), complex(-0.35, 0.3)}) {
    const std::vector<complex> pre = preimages(B, target);
    REQUIRE(static_cast<int>(pre.size()) == B.total_degree());
    for (complex r : pre) CHECK(std::abs(B.eval(r) - target) < 1e-9);
  }
}

TEST_CASE("closest return times of the rigid golden rotation are Fibonacci") {
  const RotationNumber golden = golden_mean();
  const RigidRotation rot(golden.value);
  const std::vector<long long> times = closest_return_times(rot, 0.0, 6);
  const auto table = convergents_and_returns(golden, 7);
  REQUIRE(times.size() == 6);
  for (size_t i = 0; i < times.size(); ++i) {
    CHECK(times[i] == table[i + 1].q);
  }
}

TEST_SUITE_END();
