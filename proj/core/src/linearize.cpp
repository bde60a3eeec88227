#include "siegellab/linearize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "siegellab/hypgeo.hpp"

namespace siegellab {

EmpiricalCircleMeasure::EmpiricalCircleMeasure(std::vector<double> angles_rad, std::vector<double> weights)
    : angles_(std::move(angles_rad)), weights_(std::move(weights)) {
  if (angles_.empty()) throw TooFewPoints("measure needs at least one atom");
  if (weights_.empty()) weights_.assign(angles_.size(), 1.0 / static_cast<double>(angles_.size()));
  if (weights_.size() != angles_.size()) throw ConfigError("weights and angles must pair up");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw ConfigError("measure weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ConfigError("measure weights must sum to 1");
  for (double& a : angles_) a = wrap_angle(a);

  std::vector<size_t> order(angles_.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return angles_[i] < angles_[j]; });
  sorted_angles_.reserve(angles_.size());
  cum_.reserve(angles_.size() + 1);
  cum_.push_back(0.0);
  for (size_t i : order) {
    sorted_angles_.push_back(angles_[i]);
    cum_.push_back(cum_.back() + weights_[i]);
  }
}

EmpiricalCircleMeasure EmpiricalCircleMeasure::from_orbit(const CircleMap& map, int N, double z0_turns) {
  if (N < 1) throw TooFewPoints("orbit measure needs N >= 1");
  std::vector<double> ang(N);
  double u = wrap_unit(z0_turns);
  for (int k = 0; k < N; ++k) {
    ang[k] = u * tau;
    u = wrap_unit(map.lift(u));
  }
  return EmpiricalCircleMeasure(std::move(ang));
}

double EmpiricalCircleMeasure::mass_of_arc(const ArcSegment& I) const {
  auto below = [&](double x) {  // total weight of atoms with angle <= x
    const auto it = std::upper_bound(sorted_angles_.begin(), sorted_angles_.end(), x);
    return cum_[static_cast<size_t>(it - sorted_angles_.begin())];
  };
  auto strictly_below = [&](double x) {
    const auto it = std::lower_bound(sorted_angles_.begin(), sorted_angles_.end(), x);
    return cum_[static_cast<size_t>(it - sorted_angles_.begin())];
  };
  const double end = I.start() + I.length();
  if (end <= tau) return below(end) - strictly_below(I.start());
  return (cum_.back() - strictly_below(I.start())) + below(end - tau);
}

complex EmpiricalCircleMeasure::mean_point() const {
  KahanSum re, im;
  for (size_t k = 0; k < angles_.size(); ++k) {
    const complex z = unit(angles_[k]);
    re.add(weights_[k] * z.real());
    im.add(weights_[k] * z.imag());
  }
  return {re.value(), im.value()};
}

EmpiricalCircleMeasure EmpiricalCircleMeasure::pushed_forward(const MoebiusMap& g) const {
  std::vector<double> ang;
  ang.reserve(angles_.size());
  for (double a : angles_) {
    const complex w = g.apply(unit(a));
    if (std::abs(std::abs(w) - 1.0) > 1e-9) throw ConfigError("pushforward map must preserve the circle");
    ang.push_back(wrap_angle(std::arg(w)));
  }
  return EmpiricalCircleMeasure(std::move(ang), weights_);
}

complex de_field(const EmpiricalCircleMeasure& mu, complex z) {
  KahanSum re, im;
  const auto& ang = mu.angles();
  const auto& w = mu.weights();
  const complex zbar = std::conj(z);
  for (size_t k = 0; k < ang.size(); ++k) {
    const complex zeta = unit(ang[k]);
    const complex term = (zeta - z) / (1.0 - zbar * zeta);
    re.add(w[k] * term.real());
    im.add(w[k] * term.imag());
  }
  return (1.0 - std::norm(z)) * complex{re.value(), im.value()};
}

complex barycenter(const EmpiricalCircleMeasure& mu, double tol) {
  complex z{0.0};
  for (int it = 0; it < 10'000; ++it) {
    const complex xi = de_field(mu, z);
    const double m = std::abs(xi);
    if (m <= tol) return z;
    double step = 0.5;
    bool moved = false;
    while (step >= 1e-14) {
      const complex trial = z + step * xi;
      if (std::abs(trial) < 1.0 && std::abs(de_field(mu, trial)) < m) {
        z = trial;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) throw NoConvergence("barycenter iteration stalled");
  }
  throw NoConvergence("barycenter did not reach tolerance in 10^4 steps");
}

CenterResult center(const BlaschkeProduct& B, int N, double tol) {
  const CircleLift lift(B);
  const EmpiricalCircleMeasure mu = EmpiricalCircleMeasure::from_orbit(lift, N);
  const complex z_b = barycenter(mu, tol);
  const MoebiusMap g = disk_preserving_moebius(z_b);

  // Zeros of g o B o g^{-1} are the g-images of B^{-1}(z_b); by the circle
  // symmetry of B the conjugate is again a Blaschke product over those zeros,
  // so only the unimodular prefactor needs refitting.
  std::vector<complex> p, q;
  for (complex r : preimages(B, z_b)) {
    if (std::abs(1.0 - std::conj(z_b) * r) < 1e-12) {
      throw CoincidentPoints("preimage collides with the conjugation pole");
    }
    const complex w = g.apply(r);
    (std::abs(w) < 1.0 ? p : q).push_back(w);
  }
  if (static_cast<int>(p.size()) != B.degree()) {
    throw RootFindingFailure("preimage split does not match the product degree");
  }

  // Refit the prefactor at one circle point: g o B o g^{-1} and the mapped
  // zero factors differ by a unimodular constant.
  const MoebiusMap ginv = g.inverse();
  const complex w0{1.0};
  const complex value = g.apply(B.eval(ginv.apply(w0)));
  complex factors{1.0};
  for (complex r : p) factors *= (w0 - r) / (1.0 - std::conj(r) * w0);
  for (complex r : q) factors *= (w0 - r) / (1.0 - std::conj(r) * w0);
  complex lam = value / factors;
  lam /= std::abs(lam);

  BlaschkeProduct centered(lam, p, q);
  const CircleLift lift2(centered);
  const double residual = std::abs(EmpiricalCircleMeasure::from_orbit(lift2, N).mean_point());
  return CenterResult{std::move(centered), z_b, g, residual};
}

LinearizationTable LinearizationTable::assemble(double theta, std::vector<double> s, std::vector<double> t) {
  LinearizationTable table;
  table.theta_ = theta;
  table.s_ = std::move(s);
  table.t_ = std::move(t);
  table.s_.push_back(1.0);  // wrap sentinel: the angle-0 node recurs at 1
  table.t_.push_back(1.0);
  const size_t N = table.s_.size() - 1;
  table.offset_.assign(N + 1, 0.0);
  for (size_t i = 0; i < N; ++i) {
    const double gap_s = table.s_[i + 1] - table.s_[i];
    const double gap_t = table.t_[i + 1] - table.t_[i];
    table.offset_[i + 1] = table.offset_[i] + (gap_t - gap_s);
  }
  return table;
}

LinearizationTable LinearizationTable::build(const CircleMap& map, double theta_turns, int N) {
  if (N < 2) throw TooFewPoints("linearization table needs N >= 2");
  std::vector<double> src(N), tgt(N);
  double u = 0.0;  // base point z = 1
  for (int k = 0; k < N; ++k) {
    src[k] = u;
    tgt[k] = frac_times(k, theta_turns);
    u = wrap_unit(map.lift(u));
  }
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return src[i] < src[j]; });

  std::vector<double> s(N), t(N);
  for (int i = 0; i < N; ++i) {
    s[i] = src[order[i]];
    t[i] = tgt[order[i]];
  }
  for (int i = 0; i + 1 < N; ++i) {
    if (!(t[i] < t[i + 1])) {
      throw OrderMismatch("orbit and rotation targets disagree in circle order");
    }
  }
  return assemble(theta_turns, std::move(s), std::move(t));
}

LinearizationTable LinearizationTable::identity(double theta_turns, int N) {
  if (N < 2) throw TooFewPoints("linearization table needs N >= 2");
  std::vector<double> s(N);
  for (int k = 0; k < N; ++k) s[k] = frac_times(k, theta_turns);
  std::sort(s.begin(), s.end());
  std::vector<double> t = s;
  return assemble(theta_turns, std::move(s), std::move(t));
}

double LinearizationTable::h_turns(double a_turns) const {
  const double a = wrap_unit(a_turns);
  const size_t N = s_.size() - 1;
  const auto it = std::upper_bound(s_.begin(), s_.end(), a);
  size_t idx = static_cast<size_t>(it - s_.begin());
  idx = idx == 0 ? 0 : idx - 1;  // s_[0] = 0 <= a, so idx >= 1 normally
  if (idx >= N) idx = N - 1;
  if (a == s_[idx]) return wrap_unit(t_[idx]);
  const double alpha = (a - s_[idx]) / (s_[idx + 1] - s_[idx]);
  const double off = offset_[idx] + alpha * (offset_[idx + 1] - offset_[idx]);
  return wrap_unit(a + off);
}

complex LinearizationTable::h_point(complex z) const {
  return unit_turns(h_turns(wrap_unit(std::arg(z) / tau)));
}

double LinearizationTable::max_target_gap() const {
  double best = 0.0;
  for (size_t i = 0; i + 1 < t_.size(); ++i) best = std::max(best, t_[i + 1] - t_[i]);
  return best;
}

double qs_constant(const LinearizationTable& table, const std::vector<double>& deltas_turns, int z_count) {
  std::vector<double> deltas = deltas_turns;
  if (deltas.empty()) {
    for (int j = 2; j <= 12; ++j) deltas.push_back(std::ldexp(1.0, -j));
  }
  double M = 1.0;
  for (int k = 0; k < z_count; ++k) {
    const double a = static_cast<double>(k) / z_count;
    const double h0 = table.h_turns(a);
    for (double d : deltas) {
      const double num = wrap_unit(table.h_turns(wrap_unit(a + d)) - h0);
      const double den = wrap_unit(h0 - table.h_turns(wrap_unit(a - d)));
      if (!(num > 0.0) || !(den > 0.0)) continue;
      const double r = num / den;
      M = std::max({M, r, 1.0 / r});
    }
  }
  return M;
}

namespace {

// Convergent denominators q_0..q_n from the quotient list.
std::vector<long long> denominators(const RotationNumber& theta, int n) {
  if (n < 1) throw ConfigError("return level must be >= 1");
  if (static_cast<size_t>(n) > theta.quotients.size()) {
    throw DepthExceeded("not enough quotients for the requested return level");
  }
  std::vector<long long> q{1, theta.quotients[0]};
  for (int i = 2; i <= n; ++i) q.push_back(q[i - 2] + theta.quotients[i - 1] * q[i - 1]);
  return q;
}

/// Selector arc <a, b> for orbit points with conjugacy-time difference dt:
// runs a -> b when dt theta mod 1 < 1/2, else b -> a.
ArcSegment selector_arc(double a_turns, double b_turns, long long dt, double theta) {
  if (frac_times(dt, theta) < 0.5) return ArcSegment(a_turns * tau, b_turns * tau);
  return ArcSegment(b_turns * tau, a_turns * tau);
}

double selector_length(double a_turns, double b_turns, long long dt, double theta) {
  const double fwd = wrap_unit(b_turns - a_turns);
  return frac_times(dt, theta) < 0.5 ? fwd : 1.0 - fwd;
}

void check_disjoint(std::vector<ArcSegment> arcs) {
  std::sort(arcs.begin(), arcs.end(),
            [](const ArcSegment& x, const ArcSegment& y) { return x.start() < y.start(); });
  for (size_t i = 0; i < arcs.size(); ++i) {
    const ArcSegment& cur = arcs[i];
    const double next_start = i + 1 < arcs.size() ? arcs[i + 1].start() : arcs[0].start() + tau;
    if (next_start < cur.start() + cur.length() - 1e-12) {
      throw DisjointnessViolation("pullback arcs overlap");
    }
  }
}

}  // namespace

SwiatekScan swiatek_scan(const CircleMap& map, const RotationNumber& theta, int n, double z_turns,
                         const std::vector<complex>& critical) {
  if (n < 5) throw ConfigError("swiatek_scan requires return level n >= 5");
  const auto q = denominators(theta, n);
  const long long qn = q[n], k_max = q[n - 2];

  // Forward orbit to 2 q_n, backward orbit to q_n + k_max - 1.
  std::vector<double> v(static_cast<size_t>(2 * qn + 1)), w(static_cast<size_t>(qn + k_max));
  v[0] = wrap_unit(z_turns);
  for (size_t j = 1; j < v.size(); ++j) v[j] = wrap_unit(map.lift(v[j - 1]));
  w[0] = v[0];
  for (size_t j = 1; j < w.size(); ++j) w[j] = wrap_unit(map.lift_inverse(w[j - 1]));

  const bool outer_fwd = frac_times(3 * qn, theta.value) < 0.5;  // time span of I^0
  const bool inner_fwd = frac_times(qn, theta.value) < 0.5;      // time span of J^0

  SwiatekScan scan;
  scan.n = n;
  scan.q_n = qn;
  scan.k_max = k_max;
  std::vector<ArcSegment> outers;
  for (long long k = 0; k < k_max; ++k) {
    const double back_I = w[static_cast<size_t>(qn + k)];   // time -q_n - k
    const double fwd_I = v[static_cast<size_t>(2 * qn - k)];  // time 2 q_n - k
    const double back_J = w[static_cast<size_t>(k)];          // time -k
    const double fwd_J = v[static_cast<size_t>(qn - k)];      // time q_n - k
    ArcSegment I = outer_fwd ? ArcSegment(back_I * tau, fwd_I * tau) : ArcSegment(fwd_I * tau, back_I * tau);
    ArcSegment J = inner_fwd ? ArcSegment(back_J * tau, fwd_J * tau) : ArcSegment(fwd_J * tau, back_J * tau);

    SwiatekStep step{static_cast<int>(k), I, J, 0.0, 0.0, 0.0, false};
    const QuadArcConfig cfg(I, J);
    step.cross_ratio = cross_ratio_config(cfg);
    const GeodesicResult geo = core_geodesic_length(cfg);
    step.t_value = geo.t_value;
    step.length = geo.length;
    for (complex cv : critical) {
      if (shadow(cv, I)) step.shadows_critical = true;
    }
    outers.push_back(I);
    scan.steps.push_back(step);
  }
  check_disjoint(outers);

  const double l0 = scan.steps.front().length;
  for (const SwiatekStep& s : scan.steps) {
    scan.max_length_ratio = std::max(scan.max_length_ratio, s.length / l0);
    scan.max_cross_ratio = std::max(scan.max_cross_ratio, s.cross_ratio);
    if (s.shadows_critical) ++scan.shadow_steps;
  }
  return scan;
}

DfRatios df_ratios(const CircleMap& map, const RotationNumber& theta, int n_lo, int n_hi, int z_count) {
  if (n_lo < 5) throw ConfigError("df_ratios requires return levels n >= 5");
  if (n_hi < n_lo) throw ConfigError("df_ratios needs n_hi >= n_lo");
  if (z_count < 1) throw TooFewPoints("df_ratios needs a nonempty z grid");
  const auto q = denominators(theta, n_hi + 1);

  DfRatios out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int zi = 0; zi < z_count; ++zi) {
      const double z = static_cast<double>(zi) / z_count;
      double fwd = z, fwd_next = z, back = z;
      for (long long j = 0; j < q[n]; ++j) fwd = wrap_unit(map.lift(fwd));
      for (long long j = 0; j < q[n + 1]; ++j) fwd_next = wrap_unit(map.lift(fwd_next));
      for (long long j = 0; j < q[n]; ++j) back = wrap_unit(map.lift_inverse(back));

      const double len_bz = selector_length(back, z, q[n], theta.value);
      const double len_zf = selector_length(z, fwd, q[n], theta.value);
      const double len_fz = selector_length(fwd_next, z, -q[n + 1], theta.value);
      DfRow row;
      row.n = n;
      row.z_turns = z;
      row.cp1 = len_bz / len_zf;
      row.cp2 = len_fz / len_zf;
      out.rows.push_back(row);
      out.j_empirical =
          std::max({out.j_empirical, row.cp1, 1.0 / row.cp1, row.cp2, 1.0 / row.cp2});
    }
  }
  return out;
}

int centered_arc_bound_check(const EmpiricalCircleMeasure& mu, int n_arcs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double slack = 4.0 * pi / static_cast<double>(mu.size());
  int violations = 0;
  for (int i = 0; i < n_arcs; ++i) {
    double len = uniform(rng) * tau;
    while (len <= 1e-6 || len >= tau - 1e-6) len = uniform(rng) * tau;
    const ArcSegment I = ArcSegment::from_length(uniform(rng) * tau, len);
    const double delta = mu.mass_of_arc(I);
    if (delta >= 0.5) continue;
    const double bound = 2.0 * std::acos(delta / (1.0 - delta)) - slack;
    if (tau - I.length() < bound - 1e-12) ++violations;
  }
  return violations;
}

bool arcs_cover_circle(const std::vector<ArcSegment>& arcs, double tol) {
  if (arcs.empty()) return false;
  std::vector<std::pair<double, double>> spans;  // (start, end), end may pass 2pi
  spans.reserve(arcs.size());
  double reach = -1.0;  // how far past angle 0 the wrapping arcs cover
  for (const ArcSegment& a : arcs) {
    const double end = a.start() + a.length();
    spans.emplace_back(a.start(), end);
    if (end > tau) reach = std::max(reach, end - tau);
  }
  std::sort(spans.begin(), spans.end());
  if (reach < 0.0) {
    if (spans.front().first > tol) return false;  // nothing covers angle 0
    reach = 0.0;
  }
  for (const auto& s : spans) {
    if (s.first > reach + tol) return false;
    reach = std::max(reach, s.second);
  }
  return reach >= tau - tol;
}

std::vector<ArcSegment> return_arc_pullbacks(const CircleMap& map, const RotationNumber& theta, int n,
                                             double z_turns) {
  const auto q = denominators(theta, n + 1);
  const long long qn = q[n], k_max = q[n] + q[n + 1];

  std::vector<double> v(static_cast<size_t>(qn + 1)), w(static_cast<size_t>(k_max));
  v[0] = wrap_unit(z_turns);
  for (size_t j = 1; j < v.size(); ++j) v[j] = wrap_unit(map.lift(v[j - 1]));
  w[0] = v[0];
  for (size_t j = 1; j < w.size(); ++j) w[j] = wrap_unit(map.lift_inverse(w[j - 1]));

  std::vector<ArcSegment> arcs;
  arcs.reserve(static_cast<size_t>(k_max));
  for (long long k = 0; k < k_max; ++k) {
    const double pa = w[static_cast<size_t>(k)];  // time -k
    const long long tb = qn - k;
    const double pb = tb >= 0 ? v[static_cast<size_t>(tb)] : w[static_cast<size_t>(-tb)];
    arcs.push_back(selector_arc(pa, pb, qn, theta.value));
  }
  return arcs;
}

}  // namespace siegellab
