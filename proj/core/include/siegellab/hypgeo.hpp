#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "siegellab/circlegeo.hpp"
#include "siegellab/errors.hpp"
#include "siegellab/numeric.hpp"

namespace siegellab {

/// Modulus Lambda(T) of the annulus C - ([-1,0] u [T,inf)), computed through
/// the arithmetic-geometric mean; asymptotic branches engage outside
/// [1e-8, 1e8].
double teich_modulus(double T);

/// Same quantity from log T, for ratios that overflow a double.
double teich_modulus_from_log(double log_T);

/// Hyperbolic length (curvature -1) of the core curve of an annulus of the
/// given conformal modulus: pi / mod.
double annulus_core_length(double mod);

struct GeodesicResult {
  double t_value = 0.0;   // sine cross ratio; +inf when it overflows
  double log_t = 0.0;     // always finite
  double lambda_t = 0.0;  // Lambda(T)
  double length = 0.0;    // 4 pi Lambda(T)
  Circline geodesic;      // core geodesic, orthogonal to the unit circle
};

/// Core geodesic of the annulus separating J from the complement of I.
GeodesicResult core_geodesic_length(const QuadArcConfig& cfg);

/// d(x,y) = ln((1+t)/(1-t)), t = |(x-y)/(1 - conj(y) x)|; density 2/(1-|z|^2).
double hyperbolic_distance_disk(complex x, complex y);

/// rho_{D-{y}}(x) / rho_D(x), always >= 1.
double punctured_density_ratio(complex x, complex y);

/// W = riemann sphere minus the closed complementary arc of I. Uniformized
/// onto the unit disk by a Moebius map sending the slit endpoints to 0 and
/// infinity, a square root, and a Cayley map.
class SlitSphere {
 public:
  /// swap_ends selects the other endpoint-to-{0,inf} assignment; both give
  /// the same metric.
  explicit SlitSphere(const ArcSegment& gap, bool swap_ends = false);

  const ArcSegment& gap() const { return gap_; }

  bool in_domain(complex z) const;
  complex to_disk(complex z) const;
  complex from_disk(complex w) const;
  /// Uniformizer value and complex derivative at z.
  std::pair<complex, complex> to_disk_with_derivative(complex z) const;

  double density(complex z) const;            // rho_W
  double distance(complex z1, complex z2) const;
  double punctured_density(complex z) const;  // rho_{W - {0}}
  double punctured_ratio(complex z) const;    // rho_{W-{0}} / rho_W

  /// d_W(0, D(I)) by sampling the boundary of the key domain and refining
  /// around the minimum.
  double distance_to_key_domain(int samples = 4096) const;

 private:
  ArcSegment gap_;
  complex u_, v_;  // slit endpoints sent to 0 and infinity
  complex rot_;    // aligns the slit image with the positive real axis
};

/// Max of rho_{W-{0}}/rho_W over a deterministic sample of the key domain.
double density_ratio_bound_scan(const ArcSegment& I, int n_samples = 2000);

struct DensityFitRow {
  double arc_length = 0.0;
  double max_ratio = 1.0;
};

struct DensityFit {
  std::vector<DensityFitRow> rows;
  double c_fit = 0.0;  // smallest C with log(max ratio) <= C |I| on the grid
};

DensityFit density_ratio_bound_fit(const std::vector<double>& arc_lengths, int n_samples = 2000);

struct RoundAnnulus {
  double inner_radius = 1.0;
  double outer_radius = 2.0;
  double modulus() const;
};

/// Widest round subannulus of A avoiding every point of Z; satisfies
/// mod(A) <= (|Z|+1) * mod(B).
RoundAnnulus cut_annulus(const RoundAnnulus& A, const std::vector<complex>& Z);

}  // namespace siegellab
