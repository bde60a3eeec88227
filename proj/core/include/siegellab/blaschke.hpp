#pragma once

#include <memory>
#include <vector>

#include "siegellab/cfrac.hpp"
#include "siegellab/circlegeo.hpp"
#include "siegellab/errors.hpp"
#include "siegellab/numeric.hpp"

namespace siegellab {

/// B(z) = lambda * prod (z - p_i)/(1 - conj(p_i) z) * prod (z - q_j)/(1 - conj(q_j) z)
/// with d >= 2 interior zeros p_i and d - 1 exterior zeros q_j, so B|T has
/// degree +1 and odd total degree m = 2d - 1 >= 3.
class BlaschkeProduct {
 public:
  BlaschkeProduct(complex lambda, std::vector<complex> interior_zeros, std::vector<complex> exterior_zeros);

  /// lambda z^d prod (1 - conj(a_j) z)/(z - a_j) with 0 < |a_j| < 1,
  /// rewritten into the standard form above.
  static BlaschkeProduct herman_form(complex lambda, int d, const std::vector<complex>& a);

  /// lambda z^2 (z - 3)/(1 - 3z): the cubic with a double zero at the origin.
  static BlaschkeProduct douady_ghys_cubic(double lambda_turns = 0.0);

  /// e^{2 pi i t} B: the tuning family.
  BlaschkeProduct with_prefactor(double t_turns) const;

  complex lambda() const { return lambda_; }
  const std::vector<complex>& interior_zeros() const { return interior_; }
  const std::vector<complex>& exterior_zeros() const { return exterior_; }
  int degree() const { return static_cast<int>(interior_.size()); }
  int total_degree() const { return 2 * degree() - 1; }  // m

  complex eval(complex z) const;
  complex derivative(complex z) const;
  /// Re(z B'(z)/B(z)) for |z| = 1: the derivative of the circle map in turns
  /// per turn.
  double angular_derivative(double x_turns) const;

 private:
  complex lambda_;
  std::vector<complex> interior_, exterior_;
  std::vector<complex> all_zeros_;
};

/// Degree-one monotone lift F: R -> R, F(x + 1) = F(x) + 1, in turns.
class CircleMap {
 public:
  virtual ~CircleMap() = default;
  virtual double lift(double x_turns) const = 0;
  virtual double lift_inverse(double y_turns) const = 0;
};

class RigidRotation final : public CircleMap {
 public:
  explicit RigidRotation(double rho_turns) : rho_(rho_turns) {}
  double lift(double x) const override { return x + rho_; }
  double lift_inverse(double y) const override { return y - rho_; }
  double rho() const { return rho_; }

 private:
  double rho_;
};

/// F(x) + t: the exact lift of e^{2 pi i t} B given the lift of B.
class ShiftedLift final : public CircleMap {
 public:
  ShiftedLift(const CircleMap& base, double t_turns) : base_(base), t_(t_turns) {}
  double lift(double x) const override { return base_.lift(x) + t_; }
  double lift_inverse(double y) const override { return base_.lift_inverse(y - t_); }

 private:
  const CircleMap& base_;
  double t_;
};

/// Lift of B|T realized by angle tracking on a cached grid with local
/// principal-branch correction; inversion is by bisection so circle critical
/// points (zero angular derivative) are handled.
class CircleLift final : public CircleMap {
 public:
  explicit CircleLift(const BlaschkeProduct& B, int grid_log2 = 14);

  double lift(double x_turns) const override;
  double lift_inverse(double y_turns) const override;

  const BlaschkeProduct& product() const { return B_; }
  int grid_size() const { return M_; }
  /// Angles (turns) where the angular derivative vanishes to tolerance.
  const std::vector<double>& critical_angles() const { return critical_; }
  double min_angular_derivative() const { return min_ang_; }

 private:
  BlaschkeProduct B_;
  int M_;
  std::vector<double> node_principal_;  // principal angle (turns) at j/M
  std::vector<double> node_lift_;       // cumulative lift value at j/M
  std::vector<double> critical_;
  double min_ang_ = 0.0;
};

/// rho_hat = (F^n(x0) - x0)/n with |rho_hat - rho| <= 1/n; increments summed
/// with compensation.
double rotation_number(const CircleMap& map, long long n, double x0 = 0.0);

struct TuneResult {
  double t = 0.0;         // prefactor parameter, turns
  double rho_hat = 0.0;   // rotation estimate of the tuned map
  int bisections = 0;
  bool farey_sandwich = false;  // converged by the two-sided convergent test
};

/// Finds t with rho(e^{2 pi i t} B0) = theta within tol. Bisection on t with
/// exact convergent-denominator predicates; ties toward smaller t.
TuneResult tune_to_rotation(const BlaschkeProduct& B0, const RotationNumber& theta, double tol,
                            long long n_estimate = 1 << 20);

/// I^k = (B|T)^{-k}(I), endpoint-wise by monotone bisection on the lift.
ArcSegment pullback_arc(const CircleMap& map, const ArcSegment& I, int k);

/// Critical values of B: roots of the derivative numerator mapped through B,
/// deduplicated; at most 2m - 2 points.
std::vector<complex> critical_values(const BlaschkeProduct& B);

/// The m solutions of B(z) = target, as roots of lambda N - target D where
/// N, D are the zero and reflected-zero polynomials.
std::vector<complex> preimages(const BlaschkeProduct& B, complex target);

/// Times k at which the orbit of x0 achieves a new record closest approach
/// to x0 on the circle; k = 1 is vacuously a record.
std::vector<long long> closest_return_times(const CircleMap& map, double x0, int count);

}  // namespace siegellab
