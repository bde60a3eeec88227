#include "siegellab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "siegellab/blaschke.hpp"
#include "siegellab/cfrac.hpp"
#include "siegellab/circlegeo.hpp"
#include "siegellab/errors.hpp"
#include "siegellab/hypgeo.hpp"
#include "siegellab/linearize.hpp"
#include "siegellab/siegel.hpp"

namespace siegellab {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class RowSink {
 public:
  RowSink(std::vector<VerifyRow>& rows, std::string suite)
      : rows_(rows), suite_(std::move(suite)) {}

  // pass = observed <= bound
  void upper(const std::string& check, double observed, double bound) {
    rows_.push_back({suite_, check, observed, bound, observed <= bound});
  }
  // pass = observed >= bound
  void lower(const std::string& check, double observed, double bound) {
    rows_.push_back({suite_, check, observed, bound, observed >= bound});
  }
  void flag(const std::string& check, bool ok) {
    rows_.push_back({suite_, check, ok ? 1.0 : 0.0, 1.0, ok});
  }

 private:
  std::vector<VerifyRow>& rows_;
  std::string suite_;
};

void suite_cfrac(std::vector<VerifyRow>& rows, std::uint64_t seed) {
  RowSink sink(rows, "cfrac");
  const RotationNumber golden = golden_mean();

  sink.upper("golden_reconstruct", std::abs(golden.reconstruct() - golden.value), 1e-12);
  sink.upper("silver_value", std::abs(silver_mean().value - (std::sqrt(2.0) - 1.0)), 1e-14);
  sink.flag("golden_bounded_by_1", is_bounded_type(golden, 1).bounded);

  // <q_n theta> q_{n+1} < 1 along the golden convergents.
  const auto table = convergents_and_returns(golden, 20);
  double worst = 0.0;
  for (int n = 0; n + 1 <= 20; ++n) {
    worst = std::max(worst, table[n].closest_return * static_cast<double>(table[n + 1].q));
  }
  sink.upper("golden_return_vs_next_q", worst, 1.0);

  // Random bounded-type rotation numbers: both return bounds.
  std::mt19937_64 rng(mix_seed(seed, 11));
  double worst_next = 0.0, worst_sixth = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> pattern(40);
    for (auto& a : pattern) a = 1 + static_cast<long long>(rng() % 10);
    const RotationNumber rot = periodic_quotients(pattern, 40);
    const auto tab = convergents_and_returns(rot, 13);
    for (int n = 0; n + 1 <= 13; ++n) {
      // The return <q_n theta> is computed from theta rounded to double, so
      // the comparison against 1/q_{n+1} only certifies while q_n q_{n+1}
      // stays clear of 1/eps; deeper rows drown in representation error.
      const double q_product =
          static_cast<double>(tab[n].q) * static_cast<double>(tab[n + 1].q);
      if (q_product > 1e12) break;
      worst_next = std::max(worst_next,
                            tab[n].closest_return * static_cast<double>(tab[n + 1].q));
      if (n >= 5) worst_sixth = std::max(worst_sixth, tab[n].closest_return);
    }
  }
  sink.upper("random_return_vs_next_q", worst_next, 1.0);
  sink.upper("random_return_sixth", worst_sixth, 1.0 / 6.0);
}

void suite_circlegeo(std::vector<VerifyRow>& rows, std::uint64_t seed) {
  RowSink sink(rows, "circlegeo");
  std::mt19937_64 rng(mix_seed(seed, 22));

  double worst_rot = 0.0, worst_split = 0.0, worst_mu0 = 0.0, worst_triple = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double s = tau * u01(rng);
    const double len_i = 0.5 + (tau - 0.7) * u01(rng);
    const ArcSegment I = ArcSegment::from_length(s, len_i);
    const double a = len_i * (0.05 + 0.35 * u01(rng));
    const double b = len_i * (0.55 + 0.35 * u01(rng));
    const ArcSegment J = ArcSegment::from_length(s + a, b - a);

    const QuadArcConfig cfg(I, J);
    const double C = cross_ratio_config(cfg);
    worst_split = std::max(worst_split,
                           std::abs(cfg.left().length() + cfg.inner().length() +
                                    cfg.right().length() - cfg.outer().length()));

    const double phi = tau * u01(rng);
    const double C_rot = cross_ratio_config(QuadArcConfig(I.rotated(phi), J.rotated(phi)));
    worst_rot = std::max(worst_rot, std::abs(C_rot - C) / C);

    worst_mu0 = std::max(worst_mu0, std::abs(mu_z(complex(0.0), I) - I.length()));

    // Moebius triple normalization on three distinct circle points.
    const complex z1 = I.point_start(), z2 = I.point_mid(), z3 = I.point_end();
    const MoebiusMap M = MoebiusMap::to_zero_one_inf(z1, z2, z3);
    worst_triple = std::max({worst_triple, std::abs(M.apply(z1)), std::abs(M.apply(z2) - 1.0),
                             1.0 / std::max(std::abs(M.apply(z3)), 1e-300)});
  }
  sink.upper("cross_ratio_rotation_invariance", worst_rot, 1e-10);
  sink.upper("arc_split_lengths", worst_split, 1e-12);
  sink.upper("mu_at_origin_is_length", worst_mu0, 1e-12);
  sink.upper("triple_normalization", worst_triple, 1e-6);

  const ArcSegment I = ArcSegment::from_length(0.3, 1.1);
  const KeyDomain D(I);
  sink.flag("key_domain_contains_arc_mid", D.contains(I.point_mid()));
  sink.flag("key_domain_boundary_excluded", !D.contains(I.point_start()));
  sink.flag("key_domain_far_point_excluded", !D.contains(-I.point_mid()));

  sink.flag("shadow_long_arc", shadow(complex(0.0), ArcSegment::from_length(1.0, 2.2)));
  sink.flag("shadow_short_arc", !shadow(complex(0.0), ArcSegment::from_length(1.0, 2.0)));

  const Circline line = circline_through(complex(0.0), complex(1.0), complex(2.0));
  sink.flag("circline_collinear_is_line", line.is_line);
}

void suite_hypgeo(std::vector<VerifyRow>& rows, std::uint64_t seed) {
  RowSink sink(rows, "hypgeo");

  sink.upper("lambda_at_one", std::abs(teich_modulus(1.0) - 0.5), 1e-12);

  double worst_identity = 0.0;
  int sandwich_violations = 0;
  for (int i = 0; i < 200; ++i) {
    const double T = 0.01 * std::pow(1e4, i / 199.0);
    const double l = teich_modulus(T);
    worst_identity = std::max(worst_identity, std::abs(l * teich_modulus(1.0 / T) - 0.25));
    const double e = std::exp(tau * l);
    if (!(T < e && e <= 16.0 * (T + 1.0))) ++sandwich_violations;
  }
  sink.upper("lambda_product_identity", worst_identity, 1e-10);
  sink.upper("lambda_sandwich_violations", sandwich_violations, 0.0);

  // Slit-sphere uniformizer round trip and metric sanity.
  std::mt19937_64 rng(mix_seed(seed, 33));
  const SlitSphere W(ArcSegment::from_length(0.3, 1.1));
  double worst_trip = 0.0, worst_sym = 0.0, min_ratio = 1e300;
  for (int trial = 0; trial < 60; ++trial) {
    const complex z = (0.15 + 1.8 * u01(rng)) * unit_turns(u01(rng));
    if (!W.in_domain(z) || std::abs(z) < 0.05) continue;
    const complex w = W.to_disk(z);
    worst_trip = std::max(worst_trip, std::abs(W.from_disk(w) - z) / (1.0 + std::abs(z)));
    const complex z2 = 0.5 * unit_turns(u01(rng));
    if (W.in_domain(z2)) {
      worst_sym = std::max(worst_sym, std::abs(W.distance(z, z2) - W.distance(z2, z)));
    }
    min_ratio = std::min(min_ratio, W.punctured_ratio(z));
  }
  sink.upper("slit_round_trip", worst_trip, 1e-9);
  sink.upper("slit_distance_symmetry", worst_sym, 1e-9);
  sink.lower("punctured_ratio_at_least_one", min_ratio, 1.0 - 1e-12);

  // Cutting an annulus along a middle circle point halves the log-modulus.
  const RoundAnnulus A{1.0, std::exp(tau)};
  const RoundAnnulus cut = cut_annulus(A, {std::exp(pi) * unit_turns(0.37)});
  sink.upper("cut_annulus_half_modulus", std::abs(cut.modulus() - 0.5), 1e-12);

  // Geodesic result internal consistency on a random configuration.
  const ArcSegment I = ArcSegment::from_length(1.0, 2.0);
  const ArcSegment J = ArcSegment::from_length(1.6, 0.5);
  const GeodesicResult g = core_geodesic_length(QuadArcConfig(I, J));
  sink.upper("geodesic_lambda_consistency",
             std::abs(g.lambda_t - teich_modulus(g.t_value)), 1e-12);
  sink.upper("geodesic_length_form", std::abs(g.length - 2.0 * tau * g.lambda_t), 1e-12);
}

void suite_blaschke(std::vector<VerifyRow>& rows, std::uint64_t seed) {
  RowSink sink(rows, "blaschke");
  const RotationNumber golden = golden_mean();

  const double rho = rotation_number(RigidRotation(golden.value), 100000);
  sink.upper("rigid_rotation_number", std::abs(rho - golden.value), 2.0 / 100000);

  const auto returns = closest_return_times(RigidRotation(golden.value), 0.0, 6);
  const auto conv = convergents_and_returns(golden, 7);
  int mismatches = 0;
  for (int i = 0; i < 6; ++i) {
    if (returns[i] != conv[i + 1].q) ++mismatches;
  }
  sink.upper("rigid_returns_are_convergents", mismatches, 0.0);

  const BlaschkeProduct B = BlaschkeProduct::douady_ghys_cubic();
  double worst_circle = 0.0;
  for (int j = 0; j < 256; ++j) {
    worst_circle = std::max(worst_circle,
                            std::abs(std::abs(B.eval(unit_turns(j / 256.0))) - 1.0));
  }
  sink.upper("cubic_preserves_circle", worst_circle, 1e-12);

  const CircleLift lift(B);
  sink.lower("cubic_monotone_lift", lift.min_angular_derivative(), -1e-6);
  sink.upper("cubic_critical_count",
             std::abs(static_cast<double>(lift.critical_angles().size()) - 1.0), 0.0);
  const double crit = lift.critical_angles().empty() ? 1.0 : lift.critical_angles()[0];
  sink.upper("cubic_critical_at_one", std::min(crit, 1.0 - crit), 1e-6);

  // Herman form against its defining formula on circle samples.
  std::mt19937_64 rng(mix_seed(seed, 44));
  const complex lambda = unit_turns(u01(rng));
  const std::vector<complex> a{0.45 * unit_turns(u01(rng))};
  const BlaschkeProduct H = BlaschkeProduct::herman_form(lambda, 2, a);
  double worst_herman = 0.0;
  for (int j = 0; j < 64; ++j) {
    const complex z = unit_turns((j + 0.5) / 64.0);
    const complex direct =
        lambda * z * z * (1.0 - std::conj(a[0]) * z) / (z - a[0]);
    worst_herman = std::max(worst_herman, std::abs(H.eval(z) - direct));
  }
  sink.upper("herman_form_matches_formula", worst_herman, 1e-12);

  const TuneResult tuned = tune_to_rotation(B, golden, 1e-6);
  sink.upper("tune_hits_target", std::abs(tuned.rho_hat - golden.value), 1e-6 + 1.0 / (1 << 20));
}

void suite_linearize(std::vector<VerifyRow>& rows, std::uint64_t seed) {
  RowSink sink(rows, "linearize");
  const RotationNumber golden = golden_mean();
  std::mt19937_64 rng(mix_seed(seed, 55));

  {
    std::vector<double> angles(1024);
    for (int j = 0; j < 1024; ++j) angles[j] = tau * j / 1024.0;
    const EmpiricalCircleMeasure uniform(angles);
    sink.upper("uniform_barycenter", std::abs(barycenter(uniform)), 1e-12);
    sink.upper("uniform_centered_arcs", centered_arc_bound_check(uniform, 100, mix_seed(seed, 56)),
               0.0);
  }

  double worst_equiv = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> angles(256);
    for (auto& t : angles) t = tau * u01(rng);
    const EmpiricalCircleMeasure mu(angles);
    const MoebiusMap rot{unit_turns(u01(rng)), 0.0, 0.0, 1.0};
    const MoebiusMap g = rot.compose(disk_preserving_moebius(0.6 * unit_turns(u01(rng))));
    const complex lhs = g.apply(barycenter(mu));
    const complex rhs = barycenter(mu.pushed_forward(g));
    worst_equiv = std::max(worst_equiv, std::abs(lhs - rhs));
  }
  sink.upper("barycenter_equivariance", worst_equiv, 1e-8);

  sink.upper("qs_identity_exact",
             std::abs(qs_constant(LinearizationTable::identity(golden.value, 4096)) - 1.0), 0.0);

  const RigidRotation R(golden.value);
  {
    const SwiatekScan scan = swiatek_scan(R, golden, 6, 0.0);
    double worst_iso = 0.0;
    for (const auto& step : scan.steps) {
      worst_iso = std::max(worst_iso, std::abs(step.length / scan.steps[0].length - 1.0));
    }
    sink.upper("rigid_scan_isometric", worst_iso, 1e-9);
    sink.flag("rigid_cover", arcs_cover_circle(return_arc_pullbacks(R, golden, 5, 0.0)));

    const DfRatios df = df_ratios(R, golden, 5, 7, 4);
    double worst_df = 0.0;
    for (const auto& row : df.rows) worst_df = std::max(worst_df, std::abs(row.cp1 - 1.0));
    sink.upper("rigid_df_unity", worst_df, 1e-12);
  }

  // Tuned cubic: centering residual and a level-6 scan with critical shadows.
  const BlaschkeProduct B0 = BlaschkeProduct::douady_ghys_cubic();
  const TuneResult tuned = tune_to_rotation(B0, golden, 1e-8);
  const BlaschkeProduct B = B0.with_prefactor(tuned.t);
  const CenterResult centered = center(B, 1 << 15);
  sink.upper("tuned_centering_residual", centered.clt_residual, 1e-2);

  const CircleLift lift(B);
  const SwiatekScan scan = swiatek_scan(lift, golden, 6, 0.0, critical_values(B));
  sink.flag("tuned_scan_finite", std::isfinite(scan.max_cross_ratio) && scan.q_n == 13);
}

void suite_siegel(std::vector<VerifyRow>& rows, std::uint64_t seed) {
  RowSink sink(rows, "siegel");
  const RotationNumber golden = golden_mean();
  const LinearizingSeries series = linearization_coeffs(golden, 600);
  const complex lambda = series.lambda();

  sink.upper("b2_first_step",
             std::abs(series.coefficient(2) - 1.0 / (lambda * lambda - lambda)), 1e-14);

  const RadiusEstimate est = conformal_radius(series);
  sink.upper("radius_fit_drift", est.drift, 0.01);

  const double r_half = 0.5 * est.r_hat;
  sink.upper("functional_equation_half_radius",
             functional_equation_residual(series, r_half, 128), 1e-8);

  // Orbit from the series against direct iteration of the quadratic.
  const auto orbit = gamma_orbit(series, r_half, 0.0, 200);
  complex z = orbit[0];
  double worst_orbit = 0.0;
  for (size_t k = 1; k < orbit.size(); ++k) {
    z = lambda * z + z * z;
    worst_orbit = std::max(worst_orbit, std::abs(z - orbit[k]));
  }
  sink.upper("orbit_vs_series", worst_orbit, 1e-7);

  const std::vector<complex> square{complex(1, 0), complex(0, 1), complex(-1, 0), complex(0, -1)};
  sink.upper("square_cross_ratio",
             std::abs(cross_ratio_statistic(square, 64, mix_seed(seed, 66)) - 2.0), 1e-12);

  // Moebius invariance of the statistic on a curve sample.
  const auto pts = curve_points(series, 0.8 * est.r_hat, 512);
  const double stat = cross_ratio_statistic(pts, 2000, mix_seed(seed, 67));
  const MoebiusMap g{complex(1.1, 0.3), complex(0.2, -0.1), complex(0.05, 0.02), complex(1.0, 0.0)};
  std::vector<complex> moved;
  moved.reserve(pts.size());
  for (const complex& p : pts) moved.push_back(g.apply(p));
  const double stat_moved = cross_ratio_statistic(moved, 2000, mix_seed(seed, 67));
  sink.upper("cross_ratio_moebius_invariance", std::abs(stat - stat_moved), 1e-10);
  sink.lower("curve_min_v_positive", stat, 1e-12);
  sink.flag("curve_polyline_simple", polyline_is_simple(pts));

  // Conjugating z -> a z scales the radius by |a| (quadratic coefficient 1/a).
  const LinearizingSeries scaled(golden, 600, complex(2.0, 0.0));
  sink.upper("radius_scaling",
             std::abs(2.0 * scaled.fitted_radius() / series.fitted_radius() - 1.0), 1e-9);
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"cfrac",    "circlegeo", "hypgeo",
                                              "blaschke", "linearize", "siegel"};
  return names;
}

std::vector<VerifyRow> run_verify_suite(const std::string& suite, std::uint64_t seed) {
  using SuiteFn = void (*)(std::vector<VerifyRow>&, std::uint64_t);
  static const std::pair<const char*, SuiteFn> suites[] = {
      {"cfrac", suite_cfrac},       {"circlegeo", suite_circlegeo},
      {"hypgeo", suite_hypgeo},     {"blaschke", suite_blaschke},
      {"linearize", suite_linearize}, {"siegel", suite_siegel}};

  std::vector<VerifyRow> rows;
  const bool all = (suite == "all");
  bool matched = false;
  for (const auto& [name, fn] : suites) {
    if (all || suite == name) {
      fn(rows, seed);
      matched = true;
    }
  }
  if (!matched) throw ConfigError("unknown verify suite '" + suite + "'");
  return rows;
}

CsvTable verify_csv(const std::vector<VerifyRow>& rows) {
  CsvTable table;
  table.columns = {"suite", "check", "observed", "bound", "pass"};
  for (const auto& row : rows) {
    table.add_row({row.suite, row.check, format_double(row.observed), format_double(row.bound),
                   row.pass ? "1" : "0"});
  }
  return table;
}

int count_failures(const std::vector<VerifyRow>& rows) {
  int failures = 0;
  for (const auto& row : rows) {
    if (!row.pass) ++failures;
  }
  return failures;
}

}  // namespace siegellab
