#include "siegellab/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "siegellab/parallel.hpp"

namespace siegellab {

namespace {

// Coefficients above this magnitude switch the recursion to rescaled mode.
constexpr double kRawCap = 1e250;

// Least-squares slope of y[n] against n over n = lo..hi.
double ls_slope(const std::vector<double>& y, int lo, int hi) {
  if (hi <= lo) return (lo >= 1 && lo < static_cast<int>(y.size())) ? y[lo] / lo : 0.0;
  double nbar = 0.0, ybar = 0.0;
  for (int n = lo; n <= hi; ++n) {
    nbar += n;
    ybar += y[n];
  }
  const int count = hi - lo + 1;
  nbar /= count;
  ybar /= count;
  double num = 0.0, den = 0.0;
  for (int n = lo; n <= hi; ++n) {
    num += (n - nbar) * (y[n] - ybar);
    den += (n - nbar) * (n - nbar);
  }
  return num / den;
}

}  // namespace

LinearizingSeries::LinearizingSeries(const RotationNumber& theta, int n_terms, complex beta)
    : theta_(theta), beta_(beta), n_terms_(n_terms) {
  if (n_terms_ < 2) throw ConfigError("linearizing series needs at least 2 terms");
  if (std::abs(beta_) == 0.0) throw ConfigError("quadratic coefficient must be nonzero");
  lambda_ = unit_turns(theta_.value);

  // Small divisors lambda^n - lambda, with lambda^n through frac_times so the
  // angle n*theta keeps full precision at large n.
  std::vector<complex> divisor(n_terms_ + 1);
  for (int n = 2; n <= n_terms_; ++n) {
    divisor[n] = unit_turns(frac_times(n, theta_.value)) - lambda_;
    if (std::abs(divisor[n]) < 1e-13) {
      throw SmallDivisorUnderflow("divisor |lambda^n - lambda| below 1e-13 at n = " +
                                  std::to_string(n));
    }
  }

  // Raw pass: exact recursion values while they fit in double range.
  raw_.assign(n_terms_ + 1, complex(0.0));
  log_abs_.assign(n_terms_ + 1, 0.0);
  raw_[1] = complex(1.0);
  raw_count_ = 1;
  for (int n = 2; n <= n_terms_; ++n) {
    complex s(0.0);
    for (int i = 1; i < n; ++i) s += raw_[i] * raw_[n - i];
    const complex b = beta_ * s / divisor[n];
    if (!(std::abs(b) < kRawCap)) break;
    raw_[n] = b;
    log_abs_[n] = std::log(std::abs(b));
    raw_count_ = n;
  }

  if (raw_count_ == n_terms_) {
    rho_ = 1.0;
    log_rho_ = 0.0;
    scaled_ = raw_;
  } else {
    // Rescaled run c_n = b_n rho^n: the recursion is homogeneous of degree n
    // in the seed, so reseeding with c_1 = rho reproduces it exactly.
    if (raw_count_ < 8) {
      throw UnstableEstimate("coefficients overflow before a rescale slope can be fit");
    }
    const double slope = ls_slope(log_abs_, raw_count_ / 2, raw_count_);
    log_rho_ = -slope;
    rho_ = std::exp(log_rho_);
    scaled_.assign(n_terms_ + 1, complex(0.0));
    scaled_[1] = complex(rho_);
    for (int n = 2; n <= n_terms_; ++n) {
      complex s(0.0);
      for (int i = 1; i < n; ++i) s += scaled_[i] * scaled_[n - i];
      const complex c = beta_ * s / divisor[n];
      if (!(std::abs(c) < 1e280)) {
        throw UnstableEstimate("rescaled coefficients leave double range; slope fit unstable");
      }
      scaled_[n] = c;
      if (n > raw_count_) log_abs_[n] = std::log(std::abs(c)) - n * log_rho_;
    }
  }

  const int lo = std::max(2, n_terms_ / 2);
  radius_fit_ = std::exp(-ls_slope(log_abs_, lo, n_terms_));
}

complex LinearizingSeries::coefficient(int n) const {
  if (n < 1 || n > n_terms_) throw ConfigError("coefficient index out of range");
  if (n <= raw_count_) return raw_[n];
  return scaled_[n] * std::exp(-static_cast<double>(n) * log_rho_);
}

double LinearizingSeries::log_abs_coefficient(int n) const {
  if (n < 1 || n > n_terms_) throw ConfigError("coefficient index out of range");
  return log_abs_[n];
}

complex LinearizingSeries::eval(complex w) const {
  const double aw = std::abs(w);
  if (aw == 0.0) return complex(0.0);
  const double logw = std::log(aw);
  // Highest term whose magnitude |b_n||w|^n can still reach 1e-18; everything
  // below it is kept, so dips in |b_n| cannot truncate early.
  const double log_tail = std::log(1e-18);
  int n_eff = n_terms_;
  while (n_eff > 1 && log_abs_[n_eff] + n_eff * logw < log_tail) --n_eff;

  const complex u = w / rho_;
  KahanSum re, im;
  complex p(1.0);
  for (int n = 1; n <= n_eff; ++n) {
    p *= u;  // u^n, so scaled_[n] * p = b_n w^n with balanced magnitudes
    const complex t = scaled_[n] * p;
    re.add(t.real());
    im.add(t.imag());
  }
  return complex(re.value(), im.value());
}

LinearizingSeries linearization_coeffs(const RotationNumber& theta, int n_terms) {
  return LinearizingSeries(theta, n_terms);
}

double functional_equation_residual(const LinearizingSeries& series, double radius,
                                    int n_samples) {
  if (n_samples < 1) throw ConfigError("residual check needs at least one sample");
  const complex lambda = series.lambda();
  const complex beta = series.quad_coeff();
  double worst = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const complex w = radius * unit_turns(static_cast<double>(j) / n_samples);
    const complex lhs = series.eval(lambda * w);
    const complex s = series.eval(w);
    worst = std::max(worst, std::abs(lhs - (lambda * s + beta * s * s)));
  }
  return worst;
}

RadiusEstimate conformal_radius(const LinearizingSeries& series) {
  const int N = series.truncation();
  if (N < 500) throw ConfigError("conformal_radius needs truncation >= 500");
  std::vector<double> y(N + 1, 0.0);
  for (int n = 1; n <= N; ++n) y[n] = series.log_abs_coefficient(n);

  RadiusEstimate est;
  est.n_terms = N;
  est.r_hat = series.fitted_radius();  // the [N/2, N] window fit
  est.r_hat_half = std::exp(-ls_slope(y, N / 4, N / 2));
  est.drift = std::abs(est.r_hat_half - est.r_hat) / est.r_hat;
  if (est.drift > 0.01) {
    throw UnstableEstimate("conformal radius fits drift by " + std::to_string(est.drift));
  }
  return est;
}

std::vector<complex> gamma_orbit(const LinearizingSeries& series, double r, double t0_rad,
                                 long long n_iters) {
  if (n_iters < 0) throw ConfigError("orbit length must be >= 0");
  if (!(r >= 0.0)) throw ConfigError("orbit radius must be >= 0");
  if (r > 0.99 * series.fitted_radius()) {
    throw RadiusTooLarge("orbit radius exceeds 0.99 of the fitted conformal radius");
  }
  const double theta = series.theta().value;
  std::vector<complex> pts;
  pts.reserve(static_cast<size_t>(n_iters) + 1);
  for (long long k = 0; k <= n_iters; ++k) {
    const double angle = tau * frac_times(k, theta) + t0_rad;
    pts.push_back(series.eval(r * unit(angle)));
  }
  return pts;
}

std::vector<complex> curve_points(const LinearizingSeries& series, double r, int n_samples) {
  if (n_samples < 1) throw ConfigError("curve needs at least one sample");
  if (!(r >= 0.0)) throw ConfigError("curve radius must be >= 0");
  if (r > 0.99 * series.fitted_radius()) {
    throw RadiusTooLarge("curve radius exceeds 0.99 of the fitted conformal radius");
  }
  std::vector<complex> pts;
  pts.reserve(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    pts.push_back(series.eval(r * unit_turns(static_cast<double>(j) / n_samples)));
  }
  return pts;
}

double cross_ratio_statistic(const std::vector<complex>& points, long long n_tuples,
                             std::uint64_t seed) {
  const long long m = static_cast<long long>(points.size());
  if (m < 4) throw TooFewPoints("cross-ratio statistic needs at least 4 points");
  if (n_tuples < 1) throw ConfigError("tuple count must be >= 1");

  // Quartile strata in the given cyclic order; a random rotation is applied
  // per tuple, so sampled tuples stay anticlockwise without clustering.
  long long stratum_lo[5];
  for (int j = 0; j <= 4; ++j) stratum_lo[j] = j * m / 4;

  // Fixed shard layout keeps the merged minimum independent of thread count.
  const long long quota = 1024;
  const long long n_shards = (n_tuples + quota - 1) / quota;
  std::vector<double> mins(static_cast<size_t>(n_shards),
                           std::numeric_limits<double>::infinity());

  parallel_for(n_shards, [&](long long s) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
    const long long count = std::min(quota, n_tuples - s * quota);
    double local = std::numeric_limits<double>::infinity();
    for (long long t = 0; t < count; ++t) {
      const long long offset = static_cast<long long>(rng() % static_cast<std::uint64_t>(m));
      complex w[4];
      for (int j = 0; j < 4; ++j) {
        const long long width = stratum_lo[j + 1] - stratum_lo[j];
        const long long pick =
            stratum_lo[j] + static_cast<long long>(rng() % static_cast<std::uint64_t>(width));
        w[j] = points[static_cast<size_t>((offset + pick) % m)];
      }
      const complex num = (w[0] - w[2]) * (w[1] - w[3]);
      const complex den = (w[0] - w[3]) * (w[1] - w[2]);
      const double x = std::abs(num) / std::abs(den);
      if (std::isfinite(x)) local = std::min(local, x);
    }
    mins[static_cast<size_t>(s)] = local;
  });

  double merged = std::numeric_limits<double>::infinity();
  for (double v : mins) merged = std::min(merged, v);
  if (!std::isfinite(merged)) {
    throw TooFewPoints("all sampled 4-tuples were degenerate");
  }
  return merged;
}

bool polyline_is_simple(const std::vector<complex>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) return true;

  // Per-segment bounding boxes for cheap rejection.
  std::vector<double> x_lo(n), x_hi(n), y_lo(n), y_hi(n);
  for (int i = 0; i < n; ++i) {
    const complex& a = points[i];
    const complex& b = points[(i + 1) % n];
    x_lo[i] = std::min(a.real(), b.real());
    x_hi[i] = std::max(a.real(), b.real());
    y_lo[i] = std::min(a.imag(), b.imag());
    y_hi[i] = std::max(a.imag(), b.imag());
  }

  auto side = [](const complex& a, const complex& b, const complex& c) {
    return (b.real() - a.real()) * (c.imag() - a.imag()) -
           (b.imag() - a.imag()) * (c.real() - a.real());
  };

  for (int i = 0; i < n; ++i) {
    const complex& p1 = points[i];
    const complex& p2 = points[(i + 1) % n];
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // wrap-adjacent pair
      if (x_lo[j] > x_hi[i] || x_hi[j] < x_lo[i] || y_lo[j] > y_hi[i] || y_hi[j] < y_lo[i]) {
        continue;
      }
      const complex& p3 = points[j];
      const complex& p4 = points[(j + 1) % n];
      const double d1 = side(p3, p4, p1);
      const double d2 = side(p3, p4, p2);
      const double d3 = side(p1, p2, p3);
      const double d4 = side(p1, p2, p4);
      // Strict sign changes only: shared endpoints or tangencies do not count.
      if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
          ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
        return false;
      }
    }
  }
  return true;
}

CrossRatioReport quasicircle_report(const LinearizingSeries& series,
                                    const std::vector<double>& r_rel_grid,
                                    long long n_points, long long n_tuples,
                                    std::uint64_t seed) {
  if (n_points < 4) throw TooFewPoints("quasicircle report needs at least 4 orbit points");
  const RadiusEstimate est = conformal_radius(series);
  const double theta = series.theta().value;

  CrossRatioReport report;
  report.r_hat = est.r_hat;
  report.seed = seed;
  report.n_points = n_points;

  for (size_t row_idx = 0; row_idx < r_rel_grid.size(); ++row_idx) {
    const double r_rel = r_rel_grid[row_idx];
    const double r = r_rel * est.r_hat;
    const std::vector<complex> orbit = gamma_orbit(series, r, 0.0, n_points - 1);

    // Reorder orbit points anticlockwise by conjugacy angle frac(k theta).
    std::vector<long long> idx(orbit.size());
    std::iota(idx.begin(), idx.end(), 0LL);
    std::sort(idx.begin(), idx.end(), [&](long long a, long long b) {
      return frac_times(a, theta) < frac_times(b, theta);
    });
    std::vector<complex> sorted;
    sorted.reserve(orbit.size());
    for (long long k : idx) sorted.push_back(orbit[static_cast<size_t>(k)]);

    CrossRatioRow row;
    row.r_rel = r_rel;
    row.r_abs = r;
    row.tuples = n_tuples;
    row.min_v = cross_ratio_statistic(sorted, n_tuples, mix_seed(seed, 1000 + row_idx));
    row.simple = polyline_is_simple(sorted);
    report.rows.push_back(row);
  }

  report.nonincreasing = true;
  for (size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].min_v > report.rows[i - 1].min_v) report.nonincreasing = false;
  }
  return report;
}

}  // namespace siegellab
