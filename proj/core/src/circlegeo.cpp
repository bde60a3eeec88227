#include "siegellab/circlegeo.hpp"

#include <cmath>

namespace siegellab {

namespace {

constexpr double kOnCircleTol = 1e-12;
constexpr double kArcFloor = 1e-14;

double circle_angle(complex z) { return wrap_angle(std::arg(z)); }

}  // namespace

ArcSegment::ArcSegment(double start_rad, double end_rad) {
  if (!std::isfinite(start_rad) || !std::isfinite(end_rad)) throw DegenerateArc("arc endpoint angle is not finite");
  start_ = wrap_angle(start_rad);
  end_ = wrap_angle(end_rad);
  length_ = wrap_angle(end_ - start_);
  if (length_ <= 0.0 || length_ >= tau) throw DegenerateArc("arc must be nonempty and shorter than the full circle");
}

ArcSegment ArcSegment::from_length(double start_rad, double length) {
  if (!(length > 0.0) || !(length < tau)) throw DegenerateArc("arc length must lie in (0, 2pi)");
  ArcSegment arc(start_rad, start_rad + length);
  arc.length_ = length;  // keep the requested length exactly
  return arc;
}

bool ArcSegment::contains_angle(double t) const { return wrap_angle(t - start_) <= length_; }

ArcSegment ArcSegment::rotated(double phi) const { return from_length(start_ + phi, length_); }

complex MoebiusMap::apply(complex z) const { return (a * z + b) / (c * z + d); }

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap{d, -b, -c, a}; }

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
  return MoebiusMap{a * inner.a + b * inner.c, a * inner.b + b * inner.d, c * inner.a + d * inner.c,
                    c * inner.b + d * inner.d};
}

MoebiusMap MoebiusMap::to_zero_one_inf(complex z1, complex z2, complex z3) {
  const double scale = 1.0 + std::max({std::abs(z1), std::abs(z2), std::abs(z3)});
  if (std::abs(z1 - z2) < kArcFloor * scale || std::abs(z2 - z3) < kArcFloor * scale ||
      std::abs(z1 - z3) < kArcFloor * scale) {
    throw CoincidentPoints("to_zero_one_inf needs three distinct points");
  }
  // (z - z1)(z2 - z3) / ((z - z3)(z2 - z1))
  const complex p = z2 - z3, q = z2 - z1;
  return MoebiusMap{p, -z1 * p, q, -z3 * q};
}

MoebiusMap disk_preserving_moebius(complex z) {
  if (std::abs(std::abs(z) - 1.0) < kOnCircleTol) throw OnCircle("disk_preserving_moebius requires |z| != 1");
  return MoebiusMap{complex{1.0}, -z, -std::conj(z), complex{1.0}};
}

QuadArcConfig::QuadArcConfig(const ArcSegment& outer, const ArcSegment& inner)
    : outer_(outer), inner_(inner), left_(0.0, 1.0), right_(0.0, 1.0) {
  auto [L, R] = arc_split(outer, inner);
  left_ = L;
  right_ = R;
}

std::pair<ArcSegment, ArcSegment> arc_split(const ArcSegment& I, const ArcSegment& J) {
  const double s = wrap_angle(J.start() - I.start());
  const double e = s + J.length();
  if (s <= 0.0 || e >= I.length()) {
    throw NotProperlyContained("inner arc must lie strictly inside the outer arc");
  }
  ArcSegment left = ArcSegment::from_length(I.start(), s);
  ArcSegment right = ArcSegment::from_length(J.end(), I.length() - e);
  return {left, right};
}

double cross_ratio_config(const QuadArcConfig& cfg) {
  const double j = cfg.inner().length(), l = cfg.left().length(), r = cfg.right().length();
  if (j < kArcFloor || l < kArcFloor || r < kArcFloor) {
    throw DegenerateArc("cross_ratio_config: side or inner arc collapsed");
  }
  return cfg.outer().length() * j / (r * l);
}

double mu_z(complex z, const ArcSegment& I) {
  const MoebiusMap phi = disk_preserving_moebius(z);
  const double a1 = circle_angle(phi.apply(I.point_start()));
  const double a2 = circle_angle(phi.apply(I.point_end()));
  const double am = circle_angle(phi.apply(I.point_mid()));
  // The image is the arc between a1 and a2 that contains the midpoint image.
  const double d_end = wrap_angle(a2 - a1);
  const double d_mid = wrap_angle(am - a1);
  return d_mid <= d_end ? d_end : tau - d_end;
}

bool shadow(complex z, const ArcSegment& I) {
  if (std::abs(std::abs(z) - 1.0) < kOnCircleTol) return I.contains_angle(circle_angle(z));
  return mu_z(z, I) >= 2.0 * pi / 3.0;
}

Circline circline_through(complex z1, complex z2, complex z3) {
  const double scale = 1.0 + std::max({std::abs(z1), std::abs(z2), std::abs(z3)});
  const double sep = std::min({std::abs(z1 - z2), std::abs(z2 - z3), std::abs(z1 - z3)});
  if (sep < kArcFloor * scale) throw CoincidentPoints("circline_through needs three distinct points");

  const complex u = z2 - z1, v = z3 - z1;
  const double cross = u.real() * v.imag() - u.imag() * v.real();
  const double span = std::max(std::abs(u), std::abs(v));
  Circline out;
  if (std::abs(cross) < 1e-12 * span * span) {
    out.is_line = true;
    out.point = z1;
    out.direction = u / std::abs(u);
    return out;
  }
  const double d = 2.0 * cross;
  const double nu = std::norm(u), nv = std::norm(v);
  const complex center = z1 + complex{(v.imag() * nu - u.imag() * nv) / d, (u.real() * nv - v.real() * nu) / d};
  out.center = center;
  out.radius = (std::abs(z1 - center) + std::abs(z2 - center) + std::abs(z3 - center)) / 3.0;
  return out;
}

KeyDomain::KeyDomain(const ArcSegment& I) {
  const complex e1 = I.point_start(), e2 = I.point_end();
  const complex w = I.point_mid();  // witness inside D(I)
  const double half = 0.5 * I.length();
  const double c2 = std::cos(half);
  if (std::abs(c2) < 1e-9) {
    // Endpoints are antipodal: the orthogonal circle degenerates to a diameter.
    boundary_.is_line = true;
    boundary_.point = e1;
    boundary_.direction = (e2 - e1) / std::abs(e2 - e1);
    const complex rel = w - boundary_.point;
    const double s = boundary_.direction.real() * rel.imag() - boundary_.direction.imag() * rel.real();
    side_ = s >= 0.0 ? 1 : -1;
    return;
  }
  // Center (e1 + e2)/(1 + cos|I|) has |c|^2 = 1 + rho^2, so the circle meets
  // the unit circle orthogonally at the arc endpoints.
  const complex c = (e1 + e2) / (1.0 + std::cos(I.length()));
  boundary_.center = c;
  boundary_.radius = std::sqrt(std::max(0.0, std::norm(c) - 1.0));
  side_ = std::abs(w - c) < boundary_.radius ? 1 : -1;
}

bool KeyDomain::contains(complex z) const {
  if (boundary_.is_line) {
    const complex rel = z - boundary_.point;
    const double s = boundary_.direction.real() * rel.imag() - boundary_.direction.imag() * rel.real();
    if (std::abs(s) < kOnCircleTol * (1.0 + std::abs(z))) return false;
    return (s > 0.0) == (side_ > 0);
  }
  const double r = std::abs(z - boundary_.center);
  if (std::abs(r - boundary_.radius) < kOnCircleTol * (1.0 + boundary_.radius)) return false;
  return (r < boundary_.radius) == (side_ > 0);
}

}  // namespace siegellab
