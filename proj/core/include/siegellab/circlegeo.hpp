#pragma once

#include <optional>
#include <vector>

#include "siegellab/errors.hpp"
#include "siegellab/numeric.hpp"

namespace siegellab {

/// Proper arc of the unit circle traversed anticlockwise from start to end.
/// Angles are radians in [0,2pi); the length lies strictly in (0,2pi).
class ArcSegment {
 public:
  ArcSegment(double start_rad, double end_rad);

  static ArcSegment from_length(double start_rad, double length);

  double start() const { return start_; }
  double end() const { return end_; }
  double length() const { return length_; }
  double midpoint_angle() const { return wrap_angle(start_ + 0.5 * length_); }

  complex point_start() const { return unit(start_); }
  complex point_end() const { return unit(end_); }
  complex point_mid() const { return unit(midpoint_angle()); }

  /// Closed-arc membership of an angle (radians).
  bool contains_angle(double t) const;

  /// Arc rotated rigidly by phi radians.
  ArcSegment rotated(double phi) const;

 private:
  double start_, end_, length_;
};

/// Moebius map z -> (a z + b) / (c z + d), ad - bc != 0.
struct MoebiusMap {
  complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  complex apply(complex z) const;
  MoebiusMap inverse() const;
  MoebiusMap compose(const MoebiusMap& inner) const;  // this after inner
  static MoebiusMap identity() { return MoebiusMap{}; }

  /// Maps z1 -> 0, z2 -> 1, z3 -> infinity.
  static MoebiusMap to_zero_one_inf(complex z1, complex z2, complex z3);
};

/// phi_z(w) = (w - z)/(1 - conj(z) w): sends z to 0 and preserves the unit
/// circle, for any z with |z| != 1 (interior or exterior).
MoebiusMap disk_preserving_moebius(complex z);

/// Nested arc configuration J properly contained in I with the two side
/// components L (before J) and R (after J) of I - J.
class QuadArcConfig {
 public:
  QuadArcConfig(const ArcSegment& outer, const ArcSegment& inner);

  const ArcSegment& outer() const { return outer_; }
  const ArcSegment& inner() const { return inner_; }
  const ArcSegment& left() const { return left_; }
  const ArcSegment& right() const { return right_; }

 private:
  ArcSegment outer_, inner_, left_, right_;
};

/// Splits I - J into (L, R) with L preceding and R following J
/// anticlockwise; throws NotProperlyContained when J is not strictly inside I.
std::pair<ArcSegment, ArcSegment> arc_split(const ArcSegment& I, const ArcSegment& J);

/// C(I,J) = |I||J| / (|R||L|). Throws DegenerateArc when any of |J|,|R|,|L|
/// falls below 1e-14.
double cross_ratio_config(const QuadArcConfig& cfg);

/// mu_z(I) = length of the image arc phi_z(I), z off the unit circle.
double mu_z(complex z, const ArcSegment& I);

/// z is shadowed by I when z lies on I (for |z| = 1) or mu_z(I) >= 2pi/3.
bool shadow(complex z, const ArcSegment& I);

/// Circle or line in the plane; lines carry a point and a unit direction.
struct Circline {
  bool is_line = false;
  complex center{0.0};
  double radius = 0.0;
  complex point{0.0};
  complex direction{1.0};
};

/// Circle (or line) through three pairwise distinct points.
Circline circline_through(complex z1, complex z2, complex z3);

/// Key domain D(I): the component of the complement of the circle through
/// I's endpoints orthogonal to the unit circle that contains the interior of
/// I. A disk for |I| < pi, a half plane for |I| = pi, the exterior of a disk
/// for |I| > pi.
class KeyDomain {
 public:
  explicit KeyDomain(const ArcSegment& I);

  const Circline& boundary() const { return boundary_; }
  /// +1: inside the boundary circle; -1: outside (or the line's other side).
  int side() const { return side_; }
  /// Open-domain membership; points on the boundary circle count as outside.
  bool contains(complex z) const;

 private:
  Circline boundary_;
  int side_ = 1;
};

inline KeyDomain key_domain(const ArcSegment& I) { return KeyDomain(I); }
inline bool in_key_domain(complex z, const ArcSegment& I) { return KeyDomain(I).contains(z); }

}  // namespace siegellab
