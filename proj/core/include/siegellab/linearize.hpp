#pragma once

#include <cstdint>
#include <vector>

#include "siegellab/blaschke.hpp"
#include "siegellab/cfrac.hpp"
#include "siegellab/circlegeo.hpp"
#include "siegellab/errors.hpp"
#include "siegellab/numeric.hpp"

namespace siegellab {

/// Atomic probability measure on the circle; orbit measures have uniform
/// weights 1/N.
class EmpiricalCircleMeasure {
 public:
  explicit EmpiricalCircleMeasure(std::vector<double> angles_rad, std::vector<double> weights = {});

  /// N orbit atoms of weight 1/N starting from angle z0 (turns).
  static EmpiricalCircleMeasure from_orbit(const CircleMap& map, int N, double z0_turns = 0.0);

  size_t size() const { return angles_.size(); }
  const std::vector<double>& angles() const { return angles_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Mass of the closed arc.
  double mass_of_arc(const ArcSegment& I) const;
  /// Integral of the boundary point against the measure.
  complex mean_point() const;
  /// Atoms pushed through a circle-preserving Moebius map.
  EmpiricalCircleMeasure pushed_forward(const MoebiusMap& g) const;

 private:
  std::vector<double> angles_;   // radians in [0, 2pi), construction order
  std::vector<double> weights_;  // positive, sum 1
  std::vector<double> sorted_angles_;
  std::vector<double> cum_;  // cumulative weight over sorted order
};

/// Conformal barycenter vector field xi_mu(z); vanishes exactly at the
/// barycenter.
complex de_field(const EmpiricalCircleMeasure& mu, complex z);

/// Unique zero of xi_mu in the disk, by damped fixed-point iteration
/// z <- z + xi/2 with step halving.
complex barycenter(const EmpiricalCircleMeasure& mu, double tol = 1e-12);

struct CenterResult {
  BlaschkeProduct product;   // g o B o g^{-1}
  complex z_b;               // barycenter of the orbit measure of B
  MoebiusMap g;              // disk automorphism with g(z_b) = 0
  double clt_residual = 0.0; // |mean of the recentered orbit measure|
};

/// Conjugates B so the barycenter of its invariant measure moves to 0.
CenterResult center(const BlaschkeProduct& B, int N = 1 << 16, double tol = 1e-12);

/// Orbit angles of B^k(1) paired with rotation targets k*theta mod 1; the two
/// circle orders must agree. Evaluation interpolates the displacement h - id
/// linearly between nodes, so node values are reproduced exactly.
class LinearizationTable {
 public:
  static LinearizationTable build(const CircleMap& map, double theta_turns, int N);
  /// Table with sources equal to targets; h is the identity.
  static LinearizationTable identity(double theta_turns, int N);

  int size() const { return static_cast<int>(s_.size()) - 1; }
  double theta() const { return theta_; }
  double h_turns(double a_turns) const;
  complex h_point(complex z) const;
  /// Largest adjacent target gap: the conjugacy interpolation error bound.
  double max_target_gap() const;

  const std::vector<double>& sources() const { return s_; }  // sorted + sentinel
  const std::vector<double>& targets() const { return t_; }

 private:
  static LinearizationTable assemble(double theta, std::vector<double> s, std::vector<double> t);

  double theta_ = 0.0;
  std::vector<double> s_, t_;    // sorted nodes, turns, with wrap sentinel
  std::vector<double> offset_;   // cumulative displacement t - s per node
};

/// M-hat: max over the grids of max(ratio, 1/ratio) for the one-sided image
/// length ratio of symmetric arcs.
double qs_constant(const LinearizationTable& table, const std::vector<double>& deltas_turns = {},
                   int z_count = 256);

struct SwiatekStep {
  int k = 0;
  ArcSegment outer;  // I^k
  ArcSegment inner;  // J^k
  double cross_ratio = 0.0;
  double t_value = 0.0;
  double length = 0.0;  // hyperbolic core length 4 pi Lambda(T_k)
  bool shadows_critical = false;
};

struct SwiatekScan {
  int n = 0;
  long long q_n = 0;
  long long k_max = 0;  // q_{n-2}
  std::vector<SwiatekStep> steps;
  double max_length_ratio = 1.0;  // max_k l_k / l_0
  double max_cross_ratio = 0.0;
  int shadow_steps = 0;
};

/// Pullback family of the return arcs at level n: I^k and J^k for
/// k = 0..q_{n-2}-1 with disjointness of the I^k asserted.
SwiatekScan swiatek_scan(const CircleMap& map, const RotationNumber& theta, int n, double z_turns,
                         const std::vector<complex>& critical = {});

struct DfRow {
  int n = 0;
  double z_turns = 0.0;
  double cp1 = 0.0;  // |<B^{-q_n} z, z>| / |<z, B^{q_n} z>|
  double cp2 = 0.0;  // |<B^{q_{n+1}} z, z>| / |<z, B^{q_n} z>|
};

struct DfRatios {
  std::vector<DfRow> rows;
  double j_empirical = 1.0;  // max of the ratios and their reciprocals
};

DfRatios df_ratios(const CircleMap& map, const RotationNumber& theta, int n_lo, int n_hi,
                   int z_count);

/// For random arcs I with mass delta = mu(I) < 1/2, checks
/// |T - I| >= 2 arccos(delta/(1-delta)) - 4 pi / N. Returns violation count.
int centered_arc_bound_check(const EmpiricalCircleMeasure& mu, int n_arcs, std::uint64_t seed);

/// True when the arcs jointly cover the circle (up to tol in radians).
bool arcs_cover_circle(const std::vector<ArcSegment>& arcs, double tol = 1e-9);

/// The arc family <z, B^{q_n} z> pulled back k = 0..q_n+q_{n+1}-1 times.
std::vector<ArcSegment> return_arc_pullbacks(const CircleMap& map, const RotationNumber& theta,
                                             int n, double z_turns);

}  // namespace siegellab
