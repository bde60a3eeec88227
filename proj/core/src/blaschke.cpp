#include "siegellab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace siegellab {

namespace {

constexpr double kPoleTol = 1e-12;

using Poly = std::vector<complex>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, complex{0.0});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_derivative(const Poly& a) {
  if (a.size() <= 1) return {complex{0.0}};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<double>(i);
  return out;
}

complex poly_eval(const Poly& a, complex z) {
  complex out{0.0};
  for (size_t i = a.size(); i-- > 0;) out = out * z + a[i];
  return out;
}

std::vector<complex> durand_kerner(Poly p) {
  double maxc = 0.0;
  for (complex c : p) maxc = std::max(maxc, std::abs(c));
  while (p.size() > 1 && std::abs(p.back()) <= 1e-12 * maxc) p.pop_back();
  const int n = static_cast<int>(p.size()) - 1;
  if (n <= 0) return {};
  for (complex& c : p) c /= p.back();

  std::vector<complex> w(n);
  const complex g{0.4, 0.9};
  complex acc{1.0};
  for (int i = 0; i < n; ++i) {
    acc *= g;
    w[i] = acc;
  }
  for (int it = 0; it < 500; ++it) {
    double max_step = 0.0, max_abs = 0.0;
    for (int i = 0; i < n; ++i) {
      complex denom{1.0};
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= w[i] - w[j];
      const complex delta = poly_eval(p, w[i]) / denom;
      w[i] -= delta;
      max_step = std::max(max_step, std::abs(delta));
      max_abs = std::max(max_abs, std::abs(w[i]));
    }
    if (max_step <= 1e-13 * (1.0 + max_abs)) return w;
  }
  throw RootFindingFailure("derivative root finding did not converge");
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(complex lambda, std::vector<complex> interior_zeros,
                                 std::vector<complex> exterior_zeros)
    : lambda_(lambda), interior_(std::move(interior_zeros)), exterior_(std::move(exterior_zeros)) {
  const int d = static_cast<int>(interior_.size());
  if (d < 2) throw ConfigError("Blaschke product needs at least two interior zeros (m >= 3)");
  if (static_cast<int>(exterior_.size()) != d - 1) {
    throw ConfigError("Blaschke product needs exactly d - 1 exterior zeros");
  }
  if (std::abs(std::abs(lambda_) - 1.0) > 1e-12) throw ConfigError("prefactor must be unimodular");
  for (complex p : interior_) {
    if (std::abs(p) > 1.0 - 1e-9) throw ConfigError("interior zero too close to the unit circle");
  }
  for (complex q : exterior_) {
    if (std::abs(q) < 1.0 + 1e-9) throw ConfigError("exterior zero too close to the unit circle");
  }
  all_zeros_ = interior_;
  all_zeros_.insert(all_zeros_.end(), exterior_.begin(), exterior_.end());
}

BlaschkeProduct BlaschkeProduct::herman_form(complex lambda, int d, const std::vector<complex>& a) {
  if (static_cast<int>(a.size()) != d - 1) throw ConfigError("herman_form needs d - 1 parameters");
  complex lam = lambda;
  std::vector<complex> ext;
  ext.reserve(a.size());
  for (complex ai : a) {
    const double r = std::abs(ai);
    if (r < 1e-9) throw ConfigError("herman_form parameter too close to 0");
    if (r > 1.0 - 1e-9) throw ConfigError("herman_form parameter too close to the unit circle");
    // (1 - conj(a) z)/(z - a) = (conj(a)/a) (z - q)/(1 - conj(q) z), q = 1/conj(a)
    ext.push_back(1.0 / std::conj(ai));
    lam *= std::conj(ai) / ai;
  }
  lam /= std::abs(lam);  // shed rounding in the modulus
  return BlaschkeProduct(lam, std::vector<complex>(d, complex{0.0}), ext);
}

BlaschkeProduct BlaschkeProduct::douady_ghys_cubic(double lambda_turns) {
  return BlaschkeProduct(unit_turns(lambda_turns), {complex{0.0}, complex{0.0}}, {complex{3.0}});
}

BlaschkeProduct BlaschkeProduct::with_prefactor(double t_turns) const {
  return BlaschkeProduct(lambda_ * unit_turns(t_turns), interior_, exterior_);
}

complex BlaschkeProduct::eval(complex z) const {
  complex out = lambda_;
  for (complex r : all_zeros_) {
    const complex denom = 1.0 - std::conj(r) * z;
    if (std::abs(denom) < kPoleTol) throw AtPole("Blaschke evaluation at a pole");
    out *= (z - r) / denom;
  }
  return out;
}

complex BlaschkeProduct::derivative(complex z) const {
  double min_dist = std::numeric_limits<double>::infinity();
  for (complex r : all_zeros_) min_dist = std::min(min_dist, std::abs(z - r));

  if (min_dist < 1e-6) {
    // Product rule: stable at and near the zeros.
    const size_t m = all_zeros_.size();
    std::vector<complex> f(m), df(m);
    for (size_t i = 0; i < m; ++i) {
      const complex r = all_zeros_[i];
      const complex denom = 1.0 - std::conj(r) * z;
      if (std::abs(denom) < kPoleTol) throw AtPole("Blaschke derivative at a pole");
      f[i] = (z - r) / denom;
      df[i] = (1.0 - std::norm(r)) / (denom * denom);
    }
    complex out{0.0};
    for (size_t i = 0; i < m; ++i) {
      complex term = df[i];
      for (size_t j = 0; j < m; ++j)
        if (j != i) term *= f[j];
      out += term;
    }
    return lambda_ * out;
  }
  // Logarithmic differentiation away from the zeros.
  complex logsum{0.0};
  for (complex r : all_zeros_) {
    const complex denom = 1.0 - std::conj(r) * z;
    if (std::abs(denom) < kPoleTol) throw AtPole("Blaschke derivative at a pole");
    logsum += 1.0 / (z - r) + std::conj(r) / denom;
  }
  return eval(z) * logsum;
}

double BlaschkeProduct::angular_derivative(double x_turns) const {
  const complex z = unit_turns(x_turns);
  return (z * derivative(z) / eval(z)).real();
}

CircleLift::CircleLift(const BlaschkeProduct& B, int grid_log2) : B_(B) {
  auto build = [&](int log2M) -> double {
    M_ = 1 << log2M;
    node_principal_.assign(M_ + 1, 0.0);
    node_lift_.assign(M_ + 1, 0.0);
    for (int j = 0; j <= M_; ++j) {
      node_principal_[j] = std::arg(B_.eval(unit_turns(static_cast<double>(j) / M_))) / tau;
    }
    node_lift_[0] = wrap_unit(node_principal_[0]);
    double max_step = 0.0;
    for (int j = 1; j <= M_; ++j) {
      const double inc = wrap_half(node_principal_[j] - node_principal_[j - 1]);
      max_step = std::max(max_step, std::abs(inc));
      node_lift_[j] = node_lift_[j - 1] + inc;
    }
    return max_step;
  };

  double max_step = build(grid_log2);
  if (max_step >= 0.45 && grid_log2 < 18) max_step = build(18);
  if (max_step >= 0.45) throw NotHomeomorphism("circle image moves too fast for branch tracking");

  const double winding = node_lift_[M_] - node_lift_[0];
  if (std::llround(winding) != 1 || std::abs(winding - 1.0) > 1e-9) {
    throw NotHomeomorphism("lift winding over one period is not +1");
  }
  for (int j = 1; j <= M_; ++j) {
    if (node_lift_[j] < node_lift_[j - 1] - 1e-10) {
      throw NotHomeomorphism("lift decreases on the construction grid");
    }
  }

  // Angular-derivative sweep: global minimum and refined zeros.
  const int K = std::min(M_, 1 << 14);
  std::vector<double> ang(K);
  min_ang_ = std::numeric_limits<double>::infinity();
  for (int j = 0; j < K; ++j) {
    ang[j] = B_.angular_derivative(static_cast<double>(j) / K);
    min_ang_ = std::min(min_ang_, ang[j]);
  }
  if (min_ang_ < -1e-6) throw NotHomeomorphism("angular derivative significantly negative");
  for (int j = 0; j < K; ++j) {
    const double prev = ang[(j + K - 1) % K], next = ang[(j + 1) % K];
    if (ang[j] > prev || ang[j] > next || ang[j] > 1e-3) continue;
    double lo = (j - 1.0) / K, hi = (j + 1.0) / K;
    for (int it = 0; it < 100; ++it) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (B_.angular_derivative(m1) < B_.angular_derivative(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    const double xc = 0.5 * (lo + hi);
    const double vc = B_.angular_derivative(xc);
    min_ang_ = std::min(min_ang_, vc);
    if (vc < -1e-6) throw NotHomeomorphism("angular derivative significantly negative");
    if (std::abs(vc) <= 1e-6) {
      const double xw = wrap_unit(xc);
      bool dup = false;
      for (double c : critical_) {
        if (std::abs(wrap_half(c - xw)) < 1e-9) dup = true;
      }
      if (!dup) critical_.push_back(xw);
    }
  }
  std::sort(critical_.begin(), critical_.end());
}

double CircleLift::lift(double x_turns) const {
  const double n = std::floor(x_turns);
  const double u = x_turns - n;
  const int j = std::min(static_cast<int>(u * M_), M_ - 1);
  const double p = std::arg(B_.eval(unit_turns(u))) / tau;
  return n + node_lift_[j] + wrap_half(p - node_principal_[j]);
}

double CircleLift::lift_inverse(double y_turns) const {
  const double base = node_lift_[0];
  const double k = std::floor(y_turns - base);
  const double target = y_turns - k;  // in [base, base + 1)

  // Locate the grid cell, then bisect inside it.
  int lo_idx = 0, hi_idx = M_;
  while (hi_idx - lo_idx > 1) {
    const int mid = (lo_idx + hi_idx) / 2;
    if (node_lift_[mid] <= target) {
      lo_idx = mid;
    } else {
      hi_idx = mid;
    }
  }
  lo_idx = std::min(lo_idx, M_ - 1);
  double lo = static_cast<double>(lo_idx) / M_, hi = static_cast<double>(lo_idx + 1) / M_;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lift(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  if (std::abs(lift(x) - target) > 1e-9) throw BisectionFailure("lift inversion residual too large");
  return x + k;
}

double rotation_number(const CircleMap& map, long long n, double x0) {
  if (n <= 0) throw ConfigError("rotation_number needs n > 0");
  KahanSum total;
  double u = wrap_unit(x0);
  for (long long k = 0; k < n; ++k) {
    const double v = map.lift(u);
    total.add(v - u);
    u = wrap_unit(v);
  }
  return total.value() / static_cast<double>(n);
}

namespace {

// F_t^q(0) - p with compensated increments; sign locates rho(F_t) against p/q.
double convergent_excess(const CircleMap& map, long long q, double p) {
  KahanSum total;
  double u = 0.0;
  for (long long k = 0; k < q; ++k) {
    const double v = map.lift(u);
    total.add(v - u);
    u = wrap_unit(v);
  }
  return total.value() - p;
}

}  // namespace

TuneResult tune_to_rotation(const BlaschkeProduct& B0, const RotationNumber& theta, double tol,
                            long long n_estimate) {
  if (!(tol > 0.0)) throw ConfigError("tune_to_rotation needs tol > 0");
  const CircleLift lift(B0);

  // Coarse monotone scan of rho(t) over one period of the prefactor.
  constexpr int kScan = 64;
  constexpr long long kScanIters = 4096;
  std::vector<double> rho(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    rho[i] = rotation_number(ShiftedLift(lift, static_cast<double>(i) / kScan), kScanIters);
  }
  for (int i = 0; i < kScan; ++i) {
    if (rho[i + 1] < rho[i] - 2.0 / kScanIters) {
      throw NotMonotone("rotation number decreases along the prefactor family");
    }
  }

  // Lift the target into the range swept by rho(t), t in [0,1].
  const double branch = std::ceil(rho[0] - theta.value);
  const double target = theta.value + branch;
  int cell = -1;
  for (int i = 0; i < kScan; ++i) {
    if (rho[i] - 2.0 / kScanIters <= target && target <= rho[i + 1] + 2.0 / kScanIters) {
      cell = i;
      break;
    }
  }
  if (cell < 0) throw NoBracket("target rotation number not attained on the prefactor family");

  // Consecutive convergents straddle theta; deepen until their gap
  // 1/(q_{n} q_{n+1}) drops below tol.
  std::vector<long long> ps{0, 1};
  std::vector<long long> qs{1, theta.quotients.at(0)};
  size_t level = 1;
  while (true) {
    const double gap = 1.0 / (static_cast<double>(qs[level - 1]) * static_cast<double>(qs[level]));
    if (level >= 2 && gap <= tol) break;
    if (level >= theta.quotients.size()) break;     // quotients exhausted
    if (qs[level] > (1LL << 40)) break;             // keep p + branch*q exact in doubles
    const long long a = theta.quotients.at(level);  // a_{level+1}
    ps.push_back(ps[level - 1] + a * ps[level]);
    qs.push_back(qs[level - 1] + a * qs[level]);
    ++level;
  }
  // Levels (level-1, level) straddle theta; even index sits below.
  const size_t n_lo = (level - 1) % 2 == 0 ? level - 1 : level;
  const size_t n_hi = (level - 1) % 2 == 0 ? level : level - 1;
  const double p_lo = static_cast<double>(ps[n_lo]) + branch * static_cast<double>(qs[n_lo]);
  const double p_hi = static_cast<double>(ps[n_hi]) + branch * static_cast<double>(qs[n_hi]);
  const long long q_lo = qs[n_lo], q_hi = qs[n_hi];

  TuneResult result;
  double lo = static_cast<double>(cell) / kScan, hi = static_cast<double>(cell + 1) / kScan;
  double candidate = std::numeric_limits<double>::quiet_NaN();
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const ShiftedLift Ft(lift, mid);
    if (convergent_excess(Ft, q_lo, p_lo) <= 0.0) {
      lo = mid;  // rho(mid) <= p_lo/q_lo < theta
    } else if (convergent_excess(Ft, q_hi, p_hi) >= 0.0) {
      hi = mid;  // rho(mid) >= p_hi/q_hi > theta
    } else {
      // Sandwiched between consecutive convergents: within tol of theta.
      candidate = mid;
      result.farey_sandwich = true;
      hi = mid;  // keep pushing left; ties go to smaller t
    }
    result.bisections = it + 1;
  }
  result.t = wrap_unit(std::isnan(candidate) ? lo : candidate);
  const double measured = rotation_number(ShiftedLift(lift, std::isnan(candidate) ? lo : candidate), n_estimate);
  result.rho_hat = measured - branch;
  if (std::abs(measured - target) > tol + 1.0 / static_cast<double>(n_estimate)) {
    throw BisectionFailure("tuned rotation estimate misses the target");
  }
  return result;
}

ArcSegment pullback_arc(const CircleMap& map, const ArcSegment& I, int k) {
  if (k < 0) throw ConfigError("pullback_arc needs k >= 0");
  double a = I.start() / tau, b = wrap_angle(I.end()) / tau;
  for (int i = 0; i < k; ++i) {
    a = wrap_unit(map.lift_inverse(a));
    b = wrap_unit(map.lift_inverse(b));
  }
  // Forward round trip must restore the original endpoints.
  double fa = a, fb = b;
  for (int i = 0; i < k; ++i) {
    fa = wrap_unit(map.lift(fa));
    fb = wrap_unit(map.lift(fb));
  }
  if (std::abs(wrap_half(fa - I.start() / tau)) * tau > 1e-9 ||
      std::abs(wrap_half(fb - wrap_angle(I.end()) / tau)) * tau > 1e-9) {
    throw BisectionFailure("pullback round trip drifted");
  }
  return ArcSegment(a * tau, b * tau);
}

std::vector<complex> critical_values(const BlaschkeProduct& B) {
  Poly N{complex{1.0}}, D{complex{1.0}};
  auto add_zero = [&](complex r) {
    N = poly_mul(N, Poly{-r, complex{1.0}});
    D = poly_mul(D, Poly{complex{1.0}, -std::conj(r)});
  };
  for (complex p : B.interior_zeros()) add_zero(p);
  for (complex q : B.exterior_zeros()) add_zero(q);

  // B' = lambda (N'D - ND')/D^2; the leading terms of N'D and ND' cancel,
  // so the numerator has degree <= 2m - 2.
  const Poly num_a = poly_mul(poly_derivative(N), D);
  const Poly num_b = poly_mul(N, poly_derivative(D));
  Poly P(std::max(num_a.size(), num_b.size()), complex{0.0});
  for (size_t i = 0; i < num_a.size(); ++i) P[i] += num_a[i];
  for (size_t i = 0; i < num_b.size(); ++i) P[i] -= num_b[i];

  double maxc = 0.0;
  for (complex c : P) maxc = std::max(maxc, std::abs(c));
  if (maxc == 0.0) throw RootFindingFailure("derivative numerator vanished identically");

  std::vector<complex> points;
  size_t low = 0;
  while (low < P.size() && std::abs(P[low]) <= 1e-13 * maxc) ++low;
  if (low > 0) {
    points.push_back(complex{0.0});  // root at the origin (any multiplicity)
    P.erase(P.begin(), P.begin() + low);
  }
  for (complex w : durand_kerner(P)) points.push_back(w);

  std::vector<complex> values;
  for (complex c : points) {
    bool at_pole = false;
    for (complex r : B.interior_zeros()) {
      if (std::abs(1.0 - std::conj(r) * c) < 1e-10) at_pole = true;
    }
    for (complex r : B.exterior_zeros()) {
      if (std::abs(1.0 - std::conj(r) * c) < 1e-10) at_pole = true;
    }
    if (at_pole) continue;  // critical value at infinity
    const complex v = B.eval(c);
    bool dup = false;
    for (complex seen : values) {
      if (std::abs(seen - v) < 1e-8) dup = true;
    }
    if (!dup) values.push_back(v);
  }
  return values;
}

std::vector<complex> preimages(const BlaschkeProduct& B, complex target) {
  Poly N{complex{1.0}}, D{complex{1.0}};
  auto add_zero = [&](complex r) {
    N = poly_mul(N, Poly{-r, complex{1.0}});
    D = poly_mul(D, Poly{complex{1.0}, -std::conj(r)});
  };
  for (complex p : B.interior_zeros()) add_zero(p);
  for (complex q : B.exterior_zeros()) add_zero(q);

  // lambda N(z) - target D(z): degree m with unimodular leading coefficient
  // from N, so no degree drop regardless of target.
  Poly P(N.size(), complex{0.0});
  for (size_t i = 0; i < N.size(); ++i) P[i] += B.lambda() * N[i];
  for (size_t i = 0; i < D.size(); ++i) P[i] -= target * D[i];

  const std::vector<complex> roots = durand_kerner(P);
  if (static_cast<int>(roots.size()) != B.total_degree()) {
    throw RootFindingFailure("preimage count does not match the product degree");
  }
  return roots;
}

std::vector<long long> closest_return_times(const CircleMap& map, double x0, int count) {
  if (count < 1) throw ConfigError("closest_return_times needs count >= 1");
  std::vector<long long> records;
  const double base = wrap_unit(x0);
  double u = base;
  double best = std::numeric_limits<double>::infinity();
  for (long long k = 1; k <= 50'000'000; ++k) {
    u = wrap_unit(map.lift(u));
    const double d = std::abs(wrap_half(u - base));
    if (d < best) {
      best = d;
      records.push_back(k);
      if (static_cast<int>(records.size()) == count) return records;
    }
  }
  throw NoConvergence("closest returns did not reach the requested count");
}

}  // namespace siegellab
