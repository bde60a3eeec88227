// Microbenchmarks for the hot paths: modulus evaluation, circle lifts,
// rotation numbers, series construction and the sampled statistics.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "siegellab/blaschke.hpp"
#include "siegellab/cfrac.hpp"
#include "siegellab/hypgeo.hpp"
#include "siegellab/linearize.hpp"
#include "siegellab/numeric.hpp"
#include "siegellab/siegel.hpp"

namespace {

using namespace siegellab;

const BlaschkeProduct& cubic() {
  static const BlaschkeProduct B = BlaschkeProduct::douady_ghys_cubic();
  return B;
}

const CircleLift& cubic_lift() {
  static const CircleLift lift(cubic());
  return lift;
}

void bm_teich_modulus(benchmark::State& state) {
  double t = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(teich_modulus(t));
    t = (t > 100.0) ? 0.01 : t * 1.07;
  }
}
BENCHMARK(bm_teich_modulus);

void bm_blaschke_eval(benchmark::State& state) {
  const BlaschkeProduct& B = cubic();
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(B.eval(unit_turns(x)));
    x += 0.618;
  }
}
BENCHMARK(bm_blaschke_eval);

void bm_circle_lift_construct(benchmark::State& state) {
  for (auto _ : state) {
    const CircleLift lift(cubic(), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(lift.grid_size());
  }
}
BENCHMARK(bm_circle_lift_construct)->Arg(10)->Arg(14);

void bm_circle_lift_eval(benchmark::State& state) {
  const CircleLift& lift = cubic_lift();
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift.lift(x));
    x = wrap_unit(x + 0.618);
  }
}
BENCHMARK(bm_circle_lift_eval);

void bm_rotation_number(benchmark::State& state) {
  const CircleLift& lift = cubic_lift();
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotation_number(lift, n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_rotation_number)->Arg(1 << 10)->Arg(1 << 14);

void bm_series_construct(benchmark::State& state) {
  const RotationNumber golden = golden_mean();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const LinearizingSeries s = linearization_coeffs(golden, n);
    benchmark::DoNotOptimize(s.fitted_radius());
  }
}
BENCHMARK(bm_series_construct)->Arg(500)->Arg(2000);

void bm_series_eval(benchmark::State& state) {
  static const LinearizingSeries s = linearization_coeffs(golden_mean(), 2000);
  const double r = 0.5 * s.fitted_radius();
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.eval(r * unit_turns(t)));
    t += 0.618;
  }
}
BENCHMARK(bm_series_eval);

void bm_barycenter(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  std::vector<double> ang(n);
  for (double& a : ang) a = tau * ((rng() >> 11) * 0x1.0p-53);
  const EmpiricalCircleMeasure mu(ang);
  for (auto _ : state) {
    benchmark::DoNotOptimize(barycenter(mu));
  }
}
BENCHMARK(bm_barycenter)->Arg(1 << 10)->Arg(1 << 14);

void bm_cross_ratio_statistic(benchmark::State& state) {
  static const LinearizingSeries s = linearization_coeffs(golden_mean(), 1000);
  static const std::vector<complex> pts =
      curve_points(s, 0.9 * s.fitted_radius(), 4096);
  const long long tuples = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_ratio_statistic(pts, tuples, 11));
  }
  state.SetItemsProcessed(state.iterations() * tuples);
}
BENCHMARK(bm_cross_ratio_statistic)->Arg(1 << 10)->Arg(1 << 14);

void bm_qs_constant(benchmark::State& state) {
  // The table needs a map with the target rotation number, so tune once.
  static const LinearizationTable table = [] {
    const RotationNumber golden = golden_mean();
    const TuneResult tr = tune_to_rotation(cubic(), golden, 1e-8, 1 << 18);
    return LinearizationTable::build(CircleLift(cubic().with_prefactor(tr.t)), golden.value,
                                     1 << 12);
  }();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qs_constant(table));
  }
}
BENCHMARK(bm_qs_constant);

}  // namespace

BENCHMARK_MAIN();
