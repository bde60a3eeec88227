#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace siegellab {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double tau = 2.0 * std::numbers::pi;

// x mod 1 in [0,1). Exact for x already in range.
inline double wrap_unit(double x) {
  double f = x - std::floor(x);
  return (f >= 1.0) ? 0.0 : f;
}

// angle mod 2pi in [0,2pi).
inline double wrap_angle(double a) {
  double f = a - tau * std::floor(a / tau);
  if (f >= tau) f -= tau;
  if (f < 0.0) f = 0.0;
  return f;
}

// wrap to (-1/2, 1/2], turn units.
inline double wrap_half(double x) {
  double f = x - std::round(x);
  return (f <= -0.5) ? 0.5 : f;
}

// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// frac(k*theta) with the product split by fma so the fractional part keeps
// full precision even when k*theta is large.
inline double frac_times(long long k, double theta) {
  double kd = static_cast<double>(k);
  double hi = kd * theta;
  double lo = std::fma(kd, theta, -hi);
  double f = wrap_unit(hi) + lo;
  return wrap_unit(f);
}

inline complex unit(double angle_rad) {
  return complex(std::cos(angle_rad), std::sin(angle_rad));
}

inline complex unit_turns(double x) { return unit(tau * x); }

// splitmix64 scramble of (seed, stream) into an independent generator seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace siegellab
