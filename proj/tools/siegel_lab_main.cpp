#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "siegellab/blaschke.hpp"
#include "siegellab/cfrac.hpp"
#include "siegellab/circlegeo.hpp"
#include "siegellab/config.hpp"
#include "siegellab/errors.hpp"
#include "siegellab/hypgeo.hpp"
#include "siegellab/linearize.hpp"
#include "siegellab/report.hpp"
#include "siegellab/siegel.hpp"
#include "siegellab/verify.hpp"

namespace {

using namespace siegellab;

// --- config/flag merging -----------------------------------------------

// Shared flags with RunConfig counterparts. Explicitly passed flags override
// the config file; any theta flag replaces the whole theta block so the
// one-source rule stays checkable.
struct CommonFlags {
  std::string config_path;
  std::string family;
  std::string theta_named;
  std::vector<long long> quotients;
  double value = 0.0;
  long long n = 0;
  int levels = 0;
  std::uint64_t seed = 0;

  CLI::Option* o_family = nullptr;
  CLI::Option* o_named = nullptr;
  CLI::Option* o_quot = nullptr;
  CLI::Option* o_value = nullptr;
  CLI::Option* o_n = nullptr;
  CLI::Option* o_levels = nullptr;
  CLI::Option* o_seed = nullptr;

  void add_config(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON run config; explicit flags override it");
  }
  void add_theta(CLI::App* cmd) {
    o_named = cmd->add_option("--theta", theta_named, "named rotation number: golden | silver");
    o_quot = cmd->add_option("--quotients", quotients,
                             "repeating partial-quotient pattern, comma separated")
                 ->delimiter(',');
    o_value = cmd->add_option("--value", value, "decimal rotation number in (0,1)");
  }
  void add_family(CLI::App* cmd) {
    o_family = cmd->add_option("--family", family, "product family: rigid | douady-ghys");
  }
  void add_n(CLI::App* cmd, const std::string& what) {
    o_n = cmd->add_option("--n", n, what + " (config key N)");
  }
  void add_levels(CLI::App* cmd) {
    o_levels = cmd->add_option("--n-levels", levels,
                               "dyadic delta levels 2^-2..2^-(L+1) (config key n_levels)");
  }
  void add_seed(CLI::App* cmd) {
    o_seed = cmd->add_option("--seed", seed, "sampling seed (config key seed)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (o_family && o_family->count() > 0) cfg.product = family;
    const bool any_theta = (o_named && o_named->count() > 0) ||
                           (o_quot && o_quot->count() > 0) ||
                           (o_value && o_value->count() > 0);
    if (any_theta) {
      cfg.theta = ThetaSpec{};
      if (o_named->count() > 0) cfg.theta.named = theta_named;
      if (o_quot->count() > 0) cfg.theta.quotients = quotients;
      if (o_value->count() > 0) {
        cfg.theta.has_value = true;
        cfg.theta.value = value;
      }
    }
    if (o_n && o_n->count() > 0) cfg.N = n;
    if (o_levels && o_levels->count() > 0) cfg.n_levels = levels;
    if (o_seed && o_seed->count() > 0) cfg.seed = seed;
    return cfg;
  }
};

// --- product JSON -------------------------------------------------------

// {lambda_angle, interior_zeros:[[re,im]...], exterior_zeros:[[re,im]...]};
// the angle is arg(lambda) in radians.
nlohmann::json zeros_to_json(const std::vector<complex>& zs) {
  nlohmann::json out = nlohmann::json::array();
  for (complex z : zs) out.push_back({z.real(), z.imag()});
  return out;
}

std::vector<complex> zeros_from_json(const nlohmann::json& arr, const std::string& key) {
  if (!arr.is_array()) throw ConfigError("product key '" + key + "' must be an array");
  std::vector<complex> out;
  for (const auto& pt : arr) {
    if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
      throw ConfigError("product key '" + key + "' entries must be [re, im] pairs");
    }
    out.emplace_back(pt[0].get<double>(), pt[1].get<double>());
  }
  return out;
}

std::string product_to_json(const BlaschkeProduct& B) {
  nlohmann::json j;
  j["lambda_angle"] = std::arg(B.lambda());
  j["interior_zeros"] = zeros_to_json(B.interior_zeros());
  j["exterior_zeros"] = zeros_to_json(B.exterior_zeros());
  return j.dump(2) + "\n";
}

BlaschkeProduct product_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open product file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("product file " + path + ": " + e.what());
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "lambda_angle" && key != "interior_zeros" && key != "exterior_zeros") {
      throw ConfigError("product file: unknown key '" + key + "'");
    }
  }
  if (!j.contains("lambda_angle") || !j["lambda_angle"].is_number()) {
    throw ConfigError("product file: missing numeric 'lambda_angle'");
  }
  return BlaschkeProduct(unit(j["lambda_angle"].get<double>()),
                         zeros_from_json(j.value("interior_zeros", nlohmann::json::array()),
                                         "interior_zeros"),
                         zeros_from_json(j.value("exterior_zeros", nlohmann::json::array()),
                                         "exterior_zeros"));
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + out_path);
  out << text;
}

void emit_csv(const CsvTable& table, const std::string& out_path) {
  emit_text(csv_to_string(table, /*stamp=*/true), out_path);
}

// --- dynamics assembly --------------------------------------------------

// A circle map plus the product behind it (null for the rigid rotation).
// The lift references the product, so both live here together.
struct Dynamics {
  RotationNumber theta;
  std::unique_ptr<BlaschkeProduct> product;
  std::unique_ptr<CircleMap> map;
};

Dynamics make_dynamics(const RunConfig& cfg, const std::string& product_path, double tune_tol,
                       long long tune_n) {
  Dynamics d;
  d.theta = cfg.theta.resolve();
  if (!product_path.empty()) {
    d.product = std::make_unique<BlaschkeProduct>(product_from_json(product_path));
  } else if (cfg.product == "rigid") {
    d.map = std::make_unique<RigidRotation>(d.theta.value);
    return d;
  } else if (cfg.product == "douady-ghys") {
    const BlaschkeProduct base = BlaschkeProduct::douady_ghys_cubic();
    const TuneResult tuned = tune_to_rotation(base, d.theta, tune_tol, tune_n);
    d.product = std::make_unique<BlaschkeProduct>(base.with_prefactor(tuned.t));
  } else {
    throw ConfigError("unknown product family: " + cfg.product);
  }
  d.map = std::make_unique<CircleLift>(*d.product);
  return d;
}

std::string flag(bool b) { return b ? "1" : "0"; }

// --- subcommands ---------------------------------------------------------

void register_cfrac(CLI::App& app) {
  auto* cmd = app.add_subcommand("cfrac", "Convergents p_n/q_n and closest returns <q_n theta>");
  auto fl = std::make_shared<CommonFlags>();
  auto depth = std::make_shared<int>(12);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  cmd->add_option("--depth", *depth, "row count; emits n = 0..depth-1");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, depth, out]() {
    if (*depth < 1) throw ConfigError("--depth must be >= 1");
    const RotationNumber rot = fl->resolve().theta.resolve();
    CsvTable t{{"n", "p", "q", "closest_return"}, {}};
    for (const Convergent& c : convergents_and_returns(rot, *depth - 1)) {
      t.add_row({format_int(c.n), format_int(c.p), format_int(c.q),
                 format_double(c.closest_return)});
    }
    emit_csv(t, *out);
  });
}

void register_rotnum(CLI::App& app) {
  auto* cmd = app.add_subcommand("rotnum", "Rotation number of a circle map by orbit averaging");
  auto fl = std::make_shared<CommonFlags>();
  auto product = std::make_shared<std::string>();
  auto x0 = std::make_shared<double>(0.0);
  auto tune_tol = std::make_shared<double>(1e-10);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  fl->add_family(cmd);
  fl->add_n(cmd, "iteration count");
  cmd->add_option("--product", *product, "product JSON file (overrides --family)");
  cmd->add_option("--x0", *x0, "orbit start angle, turns");
  cmd->add_option("--tune-tol", *tune_tol, "tuning tolerance for the douady-ghys family");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, product, x0, tune_tol, out]() {
    const RunConfig cfg = fl->resolve();
    const Dynamics d = make_dynamics(cfg, *product, *tune_tol, 1 << 20);
    const double rho = rotation_number(*d.map, cfg.N, *x0);
    CsvTable t{{"rho_hat", "n_iter", "x0"}, {}};
    t.add_row({format_double(rho), format_int(cfg.N), format_double(*x0)});
    emit_csv(t, *out);
  });
}

void register_tune(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "tune", "Tune the Douady-Ghys cubic prefactor to a target rotation number");
  auto fl = std::make_shared<CommonFlags>();
  auto tol = std::make_shared<double>(1e-10);
  auto n_estimate = std::make_shared<long long>(1 << 20);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  cmd->add_option("--tol", *tol, "rotation-number tolerance");
  cmd->add_option("--n-estimate", *n_estimate, "iterations per rotation estimate");
  cmd->add_option("--out", *out, "product JSON path (default stdout)");
  cmd->callback([fl, tol, n_estimate, out]() {
    const RotationNumber rot = fl->resolve().theta.resolve();
    const BlaschkeProduct base = BlaschkeProduct::douady_ghys_cubic();
    const TuneResult res = tune_to_rotation(base, rot, *tol, *n_estimate);
    emit_text(product_to_json(base.with_prefactor(res.t)), *out);
  });
}

void register_center(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "center", "Conjugate a product so its invariant measure has barycenter 0");
  auto fl = std::make_shared<CommonFlags>();
  auto product = std::make_shared<std::string>();
  auto tol = std::make_shared<double>(1e-12);
  auto tune_tol = std::make_shared<double>(1e-10);
  auto out = std::make_shared<std::string>();
  auto product_out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  fl->add_family(cmd);
  fl->add_n(cmd, "orbit atoms");
  cmd->add_option("--product", *product, "product JSON file (overrides --family)");
  cmd->add_option("--tol", *tol, "barycenter tolerance");
  cmd->add_option("--tune-tol", *tune_tol, "tuning tolerance for the douady-ghys family");
  cmd->add_option("--out", *out, "CSV report path (default stdout)");
  cmd->add_option("--product-out", *product_out, "write the centered product JSON here");
  cmd->callback([fl, product, tol, tune_tol, out, product_out]() {
    const RunConfig cfg = fl->resolve();
    const Dynamics d = make_dynamics(cfg, *product, *tune_tol, 1 << 20);
    if (!d.product) throw ConfigError("center needs a Blaschke product, not the rigid rotation");
    const CenterResult res = center(*d.product, static_cast<int>(cfg.N), *tol);
    CsvTable t{{"z_b_re", "z_b_im", "z_b_abs", "residual", "n_atoms"}, {}};
    t.add_row({format_double(res.z_b.real()), format_double(res.z_b.imag()),
               format_double(std::abs(res.z_b)), format_double(res.clt_residual),
               format_int(cfg.N)});
    emit_csv(t, *out);
    if (!product_out->empty()) emit_text(product_to_json(res.product), *product_out);
  });
}

void register_qs_estimate(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "qs-estimate", "Quasisymmetry constant of the empirical conjugacy to the rotation");
  auto fl = std::make_shared<CommonFlags>();
  auto product = std::make_shared<std::string>();
  auto z_count = std::make_shared<int>(256);
  auto tune_tol = std::make_shared<double>(1e-10);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  fl->add_family(cmd);
  fl->add_n(cmd, "orbit length / table size");
  fl->add_levels(cmd);
  cmd->add_option("--product", *product, "product JSON file (overrides --family)");
  cmd->add_option("--z-count", *z_count, "base points per delta level");
  cmd->add_option("--tune-tol", *tune_tol, "tuning tolerance for the douady-ghys family");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, product, z_count, tune_tol, out]() {
    const RunConfig cfg = fl->resolve();
    const Dynamics d = make_dynamics(cfg, *product, *tune_tol, 1 << 20);
    const LinearizationTable table =
        LinearizationTable::build(*d.map, d.theta.value, static_cast<int>(cfg.N));
    std::vector<double> deltas;
    for (int j = 1; j <= cfg.n_levels; ++j) deltas.push_back(std::ldexp(1.0, -(j + 1)));
    const double m_hat = qs_constant(table, deltas, *z_count);
    CsvTable t{{"m_hat", "n_atoms", "n_levels", "max_target_gap"}, {}};
    t.add_row({format_double(m_hat), format_int(cfg.N), format_int(cfg.n_levels),
               format_double(table.max_target_gap())});
    emit_csv(t, *out);
  });
}

void register_swiatek_scan(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "swiatek-scan", "Pullback family of the level-n return arcs with core geometry");
  auto fl = std::make_shared<CommonFlags>();
  auto product = std::make_shared<std::string>();
  auto level = std::make_shared<int>(6);
  auto z_turns = std::make_shared<double>(0.0);
  auto tune_tol = std::make_shared<double>(1e-10);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  fl->add_family(cmd);
  cmd->add_option("--product", *product, "product JSON file (overrides --family)");
  cmd->add_option("--level", *level, "return level n");
  cmd->add_option("--z", *z_turns, "base angle, turns");
  cmd->add_option("--tune-tol", *tune_tol, "tuning tolerance for the douady-ghys family");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, product, level, z_turns, tune_tol, out]() {
    const RunConfig cfg = fl->resolve();
    const Dynamics d = make_dynamics(cfg, *product, *tune_tol, 1 << 20);
    const std::vector<complex> crit =
        d.product ? critical_values(*d.product) : std::vector<complex>{};
    const SwiatekScan scan = swiatek_scan(*d.map, d.theta, *level, *z_turns, crit);
    CsvTable t{{"n", "q_n", "k", "outer_start", "outer_length", "inner_start", "inner_length",
                "cross_ratio", "t_value", "core_length", "shadows_critical", "max_length_ratio",
                "shadow_steps"},
               {}};
    for (const SwiatekStep& s : scan.steps) {
      t.add_row({format_int(scan.n), format_int(scan.q_n), format_int(s.k),
                 format_double(s.outer.start()), format_double(s.outer.length()),
                 format_double(s.inner.start()), format_double(s.inner.length()),
                 format_double(s.cross_ratio), format_double(s.t_value),
                 format_double(s.length), flag(s.shadows_critical),
                 format_double(scan.max_length_ratio), format_int(scan.shadow_steps)});
    }
    emit_csv(t, *out);
  });
}

void register_df_ratios(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "df-ratios", "Return-arc length ratios of the Denjoy comparison across levels");
  auto fl = std::make_shared<CommonFlags>();
  auto product = std::make_shared<std::string>();
  auto n_lo = std::make_shared<int>(5);
  auto n_hi = std::make_shared<int>(8);
  auto z_count = std::make_shared<int>(64);
  auto tune_tol = std::make_shared<double>(1e-10);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  fl->add_family(cmd);
  cmd->add_option("--product", *product, "product JSON file (overrides --family)");
  cmd->add_option("--n-lo", *n_lo, "first return level");
  cmd->add_option("--n-hi", *n_hi, "last return level");
  cmd->add_option("--z-count", *z_count, "base points per level");
  cmd->add_option("--tune-tol", *tune_tol, "tuning tolerance for the douady-ghys family");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, product, n_lo, n_hi, z_count, tune_tol, out]() {
    const RunConfig cfg = fl->resolve();
    const Dynamics d = make_dynamics(cfg, *product, *tune_tol, 1 << 20);
    const DfRatios r = df_ratios(*d.map, d.theta, *n_lo, *n_hi, *z_count);
    CsvTable t{{"n", "z_turns", "cp1", "cp2", "j_empirical"}, {}};
    for (const DfRow& row : r.rows) {
      t.add_row({format_int(row.n), format_double(row.z_turns), format_double(row.cp1),
                 format_double(row.cp2), format_double(r.j_empirical)});
    }
    emit_csv(t, *out);
  });
}

void register_geodesic(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "geodesic", "Core geodesic length 4 pi Lambda(T) from T or from a nested arc pair");
  auto t_in = std::make_shared<double>(0.0);
  auto outer_start = std::make_shared<double>(0.0);
  auto outer_length = std::make_shared<double>(0.0);
  auto inner_start = std::make_shared<double>(0.0);
  auto inner_length = std::make_shared<double>(0.0);
  auto out = std::make_shared<std::string>();
  auto* o_t = cmd->add_option("--t", *t_in, "evaluate Lambda at this T > 0");
  auto* o_os = cmd->add_option("--outer-start", *outer_start, "outer arc start, radians");
  auto* o_ol = cmd->add_option("--outer-length", *outer_length, "outer arc length, radians");
  auto* o_is = cmd->add_option("--inner-start", *inner_start, "inner arc start, radians");
  auto* o_il = cmd->add_option("--inner-length", *inner_length, "inner arc length, radians");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([t_in, outer_start, outer_length, inner_start, inner_length, out, o_t, o_os,
                 o_ol, o_is, o_il]() {
    const bool have_t = o_t->count() > 0;
    const bool have_arcs = o_os->count() > 0 || o_ol->count() > 0 || o_is->count() > 0 ||
                           o_il->count() > 0;
    if (have_t == have_arcs) {
      throw ConfigError("geodesic needs either --t or the four arc flags");
    }
    CsvTable t{{"t_value", "log_t", "lambda_t", "length"}, {}};
    if (have_t) {
      const double lam = teich_modulus(*t_in);
      t.add_row({format_double(*t_in), format_double(std::log(*t_in)), format_double(lam),
                 format_double(4.0 * pi * lam)});
    } else {
      const QuadArcConfig cfg(ArcSegment::from_length(*outer_start, *outer_length),
                              ArcSegment::from_length(*inner_start, *inner_length));
      const GeodesicResult g = core_geodesic_length(cfg);
      t.add_row({format_double(g.t_value), format_double(g.log_t), format_double(g.lambda_t),
                 format_double(g.length)});
    }
    emit_csv(t, *out);
  });
}

void register_siegel_render(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "siegel-render", "Sample the invariant curve Gamma_r and rasterize it");
  auto fl = std::make_shared<CommonFlags>();
  auto terms = std::make_shared<int>(2000);
  auto r_rel = std::make_shared<double>(0.9);
  auto samples = std::make_shared<int>(4096);
  auto size = std::make_shared<int>(1024);
  auto out = std::make_shared<std::string>("curve.csv");
  auto ppm = std::make_shared<std::string>("curve.ppm");
  fl->add_config(cmd);
  fl->add_theta(cmd);
  cmd->add_option("--terms", *terms, "series truncation");
  cmd->add_option("--r", *r_rel, "radius as a fraction of the fitted conformal radius");
  cmd->add_option("--samples", *samples, "curve sample count");
  cmd->add_option("--size", *size, "raster size in pixels");
  cmd->add_option("--out", *out, "curve CSV path");
  cmd->add_option("--ppm", *ppm, "raster PPM path");
  cmd->callback([fl, terms, r_rel, samples, size, out, ppm]() {
    const RotationNumber rot = fl->resolve().theta.resolve();
    const LinearizingSeries series = linearization_coeffs(rot, *terms);
    const std::vector<complex> pts =
        curve_points(series, *r_rel * series.fitted_radius(), *samples);
    CsvTable t{{"k", "re", "im"}, {}};
    for (size_t k = 0; k < pts.size(); ++k) {
      t.add_row({format_int(static_cast<long long>(k)), format_double(pts[k].real()),
                 format_double(pts[k].imag())});
    }
    emit_csv(t, *out);
    render_curve_ppm(pts, *ppm, *size);
  });
}

void register_siegel_qc(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "siegel-qc", "Cross-ratio quasicircle diagnostics over a radius grid");
  auto fl = std::make_shared<CommonFlags>();
  auto terms = std::make_shared<int>(2000);
  auto r_grid = std::make_shared<std::vector<double>>(std::vector<double>{0.5, 0.9, 0.99});
  auto points = std::make_shared<long long>(4096);
  auto tuples = std::make_shared<long long>(10000);
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_theta(cmd);
  fl->add_seed(cmd);
  cmd->add_option("--terms", *terms, "series truncation");
  cmd->add_option("--r-grid", *r_grid, "relative radii, comma separated")->delimiter(',');
  cmd->add_option("--points", *points, "orbit points per radius");
  cmd->add_option("--tuples", *tuples, "sampled 4-tuples per radius");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, terms, r_grid, points, tuples, out]() {
    const RunConfig cfg = fl->resolve();
    const LinearizingSeries series = linearization_coeffs(cfg.theta.resolve(), *terms);
    const CrossRatioReport rep =
        quasicircle_report(series, *r_grid, *points, *tuples, cfg.seed);
    CsvTable t{{"r_rel", "r_abs", "min_v", "tuples", "simple", "r_hat", "n_points", "seed",
                "nonincreasing"},
               {}};
    for (const CrossRatioRow& row : rep.rows) {
      t.add_row({format_double(row.r_rel), format_double(row.r_abs), format_double(row.min_v),
                 format_int(row.tuples), flag(row.simple), format_double(rep.r_hat),
                 format_int(rep.n_points), format_int(static_cast<long long>(rep.seed)),
                 flag(rep.nonincreasing)});
    }
    emit_csv(t, *out);
  });
}

void register_verify(CLI::App& app, int& exit_code) {
  auto* cmd = app.add_subcommand("verify", "Run the invariant suites and report each check");
  auto fl = std::make_shared<CommonFlags>();
  auto suite = std::make_shared<std::string>("all");
  auto out = std::make_shared<std::string>();
  fl->add_config(cmd);
  fl->add_seed(cmd);
  std::string suites = "all";
  for (const std::string& s : verify_suite_names()) suites += " | " + s;
  cmd->add_option("--suite", *suite, suites);
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([fl, suite, out, &exit_code]() {
    const RunConfig cfg = fl->resolve();
    const std::vector<VerifyRow> rows = run_verify_suite(*suite, cfg.seed);
    emit_csv(verify_csv(rows), *out);
    const int failures = count_failures(rows);
    std::fprintf(stderr, "%zu checks, %d failures\n", rows.size(), failures);
    if (failures > 0) exit_code = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siegel-lab: numerical experiments around Blaschke circle dynamics,\n"
               "conformal barycenters, and Siegel disk linearization"};
  app.require_subcommand(1);
  int exit_code = 0;

  register_cfrac(app);
  register_rotnum(app);
  register_tune(app);
  register_center(app);
  register_qs_estimate(app);
  register_swiatek_scan(app);
  register_df_ratios(app);
  register_geodesic(app);
  register_siegel_render(app);
  register_siegel_qc(app);
  register_verify(app, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const siegellab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const siegellab::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
