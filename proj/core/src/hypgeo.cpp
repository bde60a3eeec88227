#include "siegellab/hypgeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace siegellab {

namespace {

constexpr double kAgmLow = 1e-8;
constexpr double kAgmHigh = 1e8;
constexpr double kLog16 = 2.772588722239781;  // ln 16

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

// Lambda via K(r')/(2 K(r)) = AGM(1,r') / (2 AGM(1,r)).
double lambda_agm(double T) {
  const double r = 1.0 / std::sqrt(1.0 + T);
  const double rp = std::sqrt(T / (1.0 + T));
  return agm(1.0, rp) / (2.0 * agm(1.0, r));
}

// Square root with branch cut along the positive real axis, image in the
// upper half plane.
complex sqrt_cut(complex q) {
  double a = std::arg(q);
  if (a <= 0.0) a += tau;
  return std::polar(std::sqrt(std::abs(q)), 0.5 * a);
}

// Exact image of the circle |w - w0| = R under a Moebius map.
Circline moebius_image_circle(const MoebiusMap& g, complex w0, double R) {
  if (std::abs(g.c) < 1e-300) {
    const complex s = g.a / g.d;
    Circline out;
    out.center = (g.a * w0 + g.b) / g.d;
    out.radius = std::abs(s) * R;
    return out;
  }
  const complex p = -g.d / g.c;                      // pole of g
  const complex k = (g.b * g.c - g.a * g.d) / (g.c * g.c);
  const complex base = g.a / g.c;
  const complex u0 = w0 - p;
  const double denom = std::norm(u0) - R * R;
  if (std::abs(denom) < 1e-12 * (std::norm(u0) + R * R)) {
    // Circle passes through the pole: the image is a line.
    const complex dir0 = std::abs(u0) > 0.0 ? u0 / std::abs(u0) : complex{1.0};
    const complex z1 = g.apply(w0 + R * dir0);
    const complex z2 = g.apply(w0 + R * dir0 * complex{0.0, 1.0});
    Circline out;
    out.is_line = true;
    out.point = z1;
    out.direction = (z2 - z1) / std::abs(z2 - z1);
    return out;
  }
  const complex cv = std::conj(u0) / denom;          // inversion v = 1/(w - p)
  const double rv = R / std::abs(denom);
  Circline out;
  out.center = base + k * cv;
  out.radius = std::abs(k) * rv;
  return out;
}

}  // namespace

double teich_modulus(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw NonPositiveT("teich_modulus requires finite T > 0");
  if (T > kAgmHigh) return (kLog16 + std::log1p(T)) / tau;
  if (T < kAgmLow) return pi / (2.0 * (kLog16 + std::log1p(1.0 / T)));
  return lambda_agm(T);
}

double teich_modulus_from_log(double log_T) {
  if (!std::isfinite(log_T)) throw NonPositiveT("teich_modulus_from_log requires finite log T");
  if (log_T > std::log(kAgmHigh)) {
    return (kLog16 + log_T + std::log1p(std::exp(-log_T))) / tau;
  }
  if (log_T < -std::log(kAgmHigh)) {
    return pi / (2.0 * (kLog16 - log_T + std::log1p(std::exp(log_T))));
  }
  return lambda_agm(std::exp(log_T));
}

double annulus_core_length(double mod) {
  if (!(mod > 0.0)) throw NonPositiveModulus("annulus_core_length requires mod > 0");
  return pi / mod;
}

GeodesicResult core_geodesic_length(const QuadArcConfig& cfg) {
  const double hI = 0.5 * cfg.outer().length(), hJ = 0.5 * cfg.inner().length();
  const double hL = 0.5 * cfg.left().length(), hR = 0.5 * cfg.right().length();

  GeodesicResult out;
  if (std::min(hL, hR) < 0.5e-6) {
    // Pinched side arc: assemble log T termwise so the ratio never overflows.
    out.log_t =
        std::log(std::sin(hI)) + std::log(std::sin(hJ)) - std::log(std::sin(hL)) - std::log(std::sin(hR));
    out.t_value = std::exp(out.log_t);
  } else {
    out.t_value = std::sin(hI) * std::sin(hJ) / (std::sin(hL) * std::sin(hR));
    out.log_t = std::log(out.t_value);
  }
  out.lambda_t = teich_modulus_from_log(out.log_t);
  out.length = 4.0 * pi * out.lambda_t;

  // Normalize (J.start, J.end, I.end) -> (0, -1, inf); the core geodesic of
  // the normalized annulus is |w + 1| = sqrt(1 + T).
  MoebiusMap M = MoebiusMap::to_zero_one_inf(cfg.inner().point_start(), cfg.inner().point_end(),
                                             cfg.outer().point_end());
  M.a = -M.a;
  M.b = -M.b;
  const MoebiusMap Minv = M.inverse();
  if (out.log_t > 600.0) {
    // |w+1| = R with R^2 >> everything: image center/radius to leading order.
    const complex k = (Minv.b * Minv.c - Minv.a * Minv.d) / (Minv.c * Minv.c);
    out.geodesic.center = Minv.a / Minv.c;
    out.geodesic.radius = std::abs(k) * std::exp(-0.5 * out.log_t);
  } else {
    out.geodesic = moebius_image_circle(Minv, complex{-1.0, 0.0}, std::sqrt(1.0 + out.t_value));
  }
  return out;
}

double hyperbolic_distance_disk(complex x, complex y) {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0) throw OutsideDisk("hyperbolic_distance_disk requires |x|,|y| < 1");
  const double t = std::abs((x - y) / (1.0 - std::conj(y) * x));
  return std::log((1.0 + t) / (1.0 - t));
}

double punctured_density_ratio(complex x, complex y) {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0) throw OutsideDisk("punctured_density_ratio requires |x|,|y| < 1");
  const complex z = (x - y) / (1.0 - std::conj(y) * x);
  const double r = std::abs(z);
  if (r < 1e-15) throw CoincidentPoints("punctured_density_ratio requires x != y");
  // rho_{D-{0}}(z) / rho_D(z) = (1 - r^2) / (2 r ln(1/r))
  return (1.0 - r * r) / (2.0 * r * std::log(1.0 / r));
}

SlitSphere::SlitSphere(const ArcSegment& gap, bool swap_ends) : gap_(gap) {
  u_ = swap_ends ? gap.point_start() : gap.point_end();
  v_ = swap_ends ? gap.point_end() : gap.point_start();
  // Midpoint of the slit (the complementary arc), used to align its image.
  const double slit_mid = wrap_angle(gap.end() + 0.5 * (tau - gap.length()));
  const complex m_mid = (unit(slit_mid) - u_) / (unit(slit_mid) - v_);
  rot_ = std::polar(1.0, -std::arg(m_mid));
}

bool SlitSphere::in_domain(complex z) const {
  if (std::abs(std::abs(z) - 1.0) >= 1e-12) return true;
  const double t = wrap_angle(std::arg(z));
  const double off = wrap_angle(t - gap_.start());
  return off > 1e-12 && off < gap_.length() - 1e-12;
}

complex SlitSphere::to_disk(complex z) const { return to_disk_with_derivative(z).first; }

std::pair<complex, complex> SlitSphere::to_disk_with_derivative(complex z) const {
  if (!in_domain(z)) throw OutsideDomain("point lies on the slit");
  const complex m = (z - u_) / (z - v_);
  const complex dm = (u_ - v_) / ((z - v_) * (z - v_));
  const complex q = rot_ * m;
  const complex dq = rot_ * dm;
  const complex s = sqrt_cut(q);
  const complex ds = dq / (2.0 * s);
  const complex denom = s + complex{0.0, 1.0};
  const complex w = (s - complex{0.0, 1.0}) / denom;
  const complex dw = ds * complex{0.0, 2.0} / (denom * denom);
  return {w, dw};
}

complex SlitSphere::from_disk(complex w) const {
  if (std::abs(w) >= 1.0) throw OutsideDisk("from_disk requires |w| < 1");
  const complex s = complex{0.0, 1.0} * (1.0 + w) / (1.0 - w);
  const complex m = s * s * std::conj(rot_);
  return (m * v_ - u_) / (m - 1.0);
}

double SlitSphere::density(complex z) const {
  const auto [w, dw] = to_disk_with_derivative(z);
  return 2.0 / (1.0 - std::norm(w)) * std::abs(dw);
}

double SlitSphere::distance(complex z1, complex z2) const {
  return hyperbolic_distance_disk(to_disk(z1), to_disk(z2));
}

double SlitSphere::punctured_density(complex z) const {
  const auto [w, dw] = to_disk_with_derivative(z);
  const complex w0 = to_disk(complex{0.0});
  const complex zeta = (w - w0) / (1.0 - std::conj(w0) * w);
  const double r = std::abs(zeta);
  if (r < 1e-15) throw CoincidentPoints("punctured density is undefined at the puncture");
  const double dzeta = (1.0 - std::norm(w0)) / std::norm(1.0 - std::conj(w0) * w);
  return 1.0 / (r * std::log(1.0 / r)) * dzeta * std::abs(dw);
}

double SlitSphere::punctured_ratio(complex z) const {
  const complex w = to_disk(z);
  const complex w0 = to_disk(complex{0.0});
  return punctured_density_ratio(w, w0);
}

double SlitSphere::distance_to_key_domain(int samples) const {
  if (gap_.length() >= pi - 1e-9) throw ArcTooLong("distance_to_key_domain requires |I| < pi");
  if (samples < 8) throw TooFewPoints("distance_to_key_domain needs at least 8 samples");
  const KeyDomain kd(gap_);
  const Circline& G = kd.boundary();
  const complex w0 = to_disk(complex{0.0});

  auto dist_at = [&](double phi) {
    const complex z = G.center + std::polar(G.radius, phi);
    if (!in_domain(z)) return std::numeric_limits<double>::infinity();
    return hyperbolic_distance_disk(w0, to_disk(z));
  };

  double best = std::numeric_limits<double>::infinity();
  double best_phi = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double phi = tau * i / samples;
    const double d = dist_at(phi);
    if (d < best) {
      best = d;
      best_phi = phi;
    }
  }
  // Golden-section refinement around the coarse minimum.
  double lo = best_phi - tau / samples, hi = best_phi + tau / samples;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = dist_at(x1), f2 = dist_at(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = dist_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = dist_at(x2);
    }
  }
  return std::min(best, std::min(f1, f2));
}

double density_ratio_bound_scan(const ArcSegment& I, int n_samples) {
  if (I.length() >= 2.0 * pi / 3.0) throw ArcTooLong("density_ratio_bound_scan requires |I| < 2pi/3");
  if (n_samples < 16) throw TooFewPoints("density_ratio_bound_scan needs at least 16 samples");
  const SlitSphere W(I);
  const KeyDomain kd(I);
  const Circline& G = kd.boundary();

  const int n_ang = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_samples))));
  const int n_rad = (n_samples + n_ang - 1) / n_ang;
  double best = 1.0;
  for (int i = 0; i < n_rad; ++i) {
    const double r = G.radius * std::sqrt((i + 0.5) / n_rad);
    for (int j = 0; j < n_ang; ++j) {
      const complex z = G.center + std::polar(r, tau * j / n_ang);
      if (!W.in_domain(z) || std::abs(z) < 1e-12) continue;
      best = std::max(best, W.punctured_ratio(z));
    }
  }
  return best;
}

DensityFit density_ratio_bound_fit(const std::vector<double>& arc_lengths, int n_samples) {
  DensityFit fit;
  for (double len : arc_lengths) {
    const ArcSegment I = ArcSegment::from_length(-0.5 * len, len);
    const double ratio = density_ratio_bound_scan(I, n_samples);
    fit.rows.push_back({len, ratio});
    fit.c_fit = std::max(fit.c_fit, std::log(ratio) / len);
  }
  return fit;
}

double RoundAnnulus::modulus() const {
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius)) {
    throw NonPositiveModulus("round annulus requires 0 < inner < outer");
  }
  return std::log(outer_radius / inner_radius) / tau;
}

RoundAnnulus cut_annulus(const RoundAnnulus& A, const std::vector<complex>& Z) {
  (void)A.modulus();  // validates radii
  std::vector<double> logr;
  logr.reserve(Z.size() + 2);
  logr.push_back(std::log(A.inner_radius));
  for (complex z : Z) {
    const double r = std::abs(z);
    if (!(r > A.inner_radius) || !(r < A.outer_radius)) {
      throw OutsideDomain("cut_annulus: point outside the open annulus");
    }
    logr.push_back(std::log(r));
  }
  logr.push_back(std::log(A.outer_radius));
  std::sort(logr.begin(), logr.end());

  size_t best = 0;
  double best_gap = -1.0;
  for (size_t i = 0; i + 1 < logr.size(); ++i) {
    const double gap = logr[i + 1] - logr[i];
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best_gap <= 1e-12) throw EmptyInterior("cut_annulus: points saturate the annulus");
  return RoundAnnulus{std::exp(logr[best]), std::exp(logr[best + 1])};
}

}  // namespace siegellab
