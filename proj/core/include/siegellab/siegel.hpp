#pragma once

#include <cstdint>
#include <vector>

#include "siegellab/cfrac.hpp"
#include "siegellab/errors.hpp"
#include "siegellab/numeric.hpp"

namespace siegellab {

/// @brief Power-series linearization of P(z) = lambda z + beta z^2 at 0.
///
/// sigma(w) = w + b_2 w^2 + ... solves sigma(lambda w) = P(sigma(w)) with
/// b_1 = 1 and lambda = e^{2 pi i theta}. The recursion
/// b_n = beta * sum_{i+j=n} b_i b_j / (lambda^n - lambda) grows like
/// (1/r_hat)^n, so past the range of double magnitudes the coefficients are
/// carried rescaled: c_n = b_n rho^n stays O(1) for rho close to r_hat.
class LinearizingSeries {
 public:
  /// Computes coefficients b_1..b_n_terms. beta is the quadratic coefficient;
  /// conjugating z -> a z sends beta to beta / a and scales r_hat by |a|.
  explicit LinearizingSeries(const RotationNumber& theta, int n_terms,
                             complex beta = complex(1.0, 0.0));

  const RotationNumber& theta() const { return theta_; }
  complex lambda() const { return lambda_; }
  complex quad_coeff() const { return beta_; }
  int truncation() const { return n_terms_; }

  /// b_n without rescaling. Exact recursion values for n <= raw_prefix();
  /// beyond that the unscaled magnitude can overflow to inf.
  complex coefficient(int n) const;

  /// log|b_n|, finite for every stored n. Stable accessor for tail fits.
  double log_abs_coefficient(int n) const;

  /// Largest n whose coefficient is stored without rescaling.
  int raw_prefix() const { return raw_count_; }

  /// Slope-fit radius over the tail window [n/2, n]. Cheap estimate cached at
  /// construction; conformal_radius() adds the stability gate.
  double fitted_radius() const { return radius_fit_; }

  /// sigma(w) by compensated ascending summation in u = w / rho. Terms with
  /// |b_n||w|^n < 1e-18 are dropped from the top.
  complex eval(complex w) const;

 private:
  RotationNumber theta_;
  complex lambda_;
  complex beta_;
  int n_terms_ = 0;
  int raw_count_ = 0;
  double rho_ = 1.0;       // internal rescale, c_n = b_n rho^n
  double log_rho_ = 0.0;
  double radius_fit_ = 0.0;
  std::vector<complex> raw_;     // b_n, n <= raw_count_ ([0] unused)
  std::vector<complex> scaled_;  // c_n for all n ([0] unused)
  std::vector<double> log_abs_;  // log|b_n| for all n ([0] unused)
};

/// Quadratic instantiation P(z) = e^{2 pi i theta} z + z^2.
LinearizingSeries linearization_coeffs(const RotationNumber& theta, int n_terms);

/// Max of |sigma(lambda w) - (lambda sigma(w) + beta sigma(w)^2)| over
/// n_samples points of the circle |w| = radius.
double functional_equation_residual(const LinearizingSeries& series, double radius,
                                    int n_samples = 256);

/// @brief Conformal-radius fit with a stability report.
struct RadiusEstimate {
  double r_hat = 0.0;       // fit over [N/2, N]
  double r_hat_half = 0.0;  // fit over [N/4, N/2]
  double drift = 0.0;       // |r_hat_half - r_hat| / r_hat
  int n_terms = 0;
};

/// r_hat = 1/limsup |b_n|^{1/n} by least-squares fit of log|b_n| against n.
/// Requires truncation >= 500; throws UnstableEstimate if the half-length and
/// full-length fits disagree by more than 1%.
RadiusEstimate conformal_radius(const LinearizingSeries& series);

/// Orbit on the invariant curve Gamma_r: z_k = sigma(lambda^k r e^{i t0}),
/// k = 0..n_iters. Requires r <= 0.99 * fitted radius (RadiusTooLarge).
std::vector<complex> gamma_orbit(const LinearizingSeries& series, double r,
                                 double t0_rad, long long n_iters);

/// Gamma_r sampled at n_samples equally spaced conjugacy angles; points come
/// out in anticlockwise order. Same radius guard as gamma_orbit.
std::vector<complex> curve_points(const LinearizingSeries& series, double r,
                                  int n_samples);

/// Minimum of |(w1-w3)(w2-w4) / ((w1-w4)(w2-w3))| over n_tuples sampled
/// 4-tuples. Points must already be in cyclic (anticlockwise) order; each
/// tuple picks one index per quartile after a random cyclic rotation, so the
/// tuple respects that order. Sampling is sharded with per-shard seeds; the
/// merged minimum does not depend on thread count.
double cross_ratio_statistic(const std::vector<complex>& points, long long n_tuples,
                             std::uint64_t seed);

/// True if the closed polyline through the points has no proper
/// self-intersection (adjacent segments excluded).
bool polyline_is_simple(const std::vector<complex>& points);

struct CrossRatioRow {
  double r_rel = 0.0;  // r / r_hat
  double r_abs = 0.0;
  double min_v = 0.0;
  long long tuples = 0;
  bool simple = false;  // orbit polyline simple at sample resolution
};

/// @brief Per-radius quasicircle diagnostics for one series.
struct CrossRatioReport {
  double r_hat = 0.0;
  std::uint64_t seed = 0;
  long long n_points = 0;
  std::vector<CrossRatioRow> rows;
  bool nonincreasing = false;  // min_v trend along the r grid, recorded only
};

/// For each relative radius: orbit points sorted by conjugacy angle, the
/// cross-ratio minimum, and the simple-polyline check.
CrossRatioReport quasicircle_report(const LinearizingSeries& series,
                                    const std::vector<double>& r_rel_grid,
                                    long long n_points, long long n_tuples,
                                    std::uint64_t seed);

}  // namespace siegellab
