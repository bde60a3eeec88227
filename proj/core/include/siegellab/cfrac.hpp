#pragma once

#include <cstdint>
#include <vector>

#include "siegellab/errors.hpp"

namespace siegellab {

/// Bounded-type irrational rotation number with its continued-fraction data.
/// Partial quotients a_1..a_K (K >= 2); value is theta in (0,1).
struct RotationNumber {
  double value = 0.0;
  std::vector<long long> quotients;

  long long bound() const;

  /// Evaluates [a_1,...,a_K] bottom-up; matches value within 10*eps*q_K^2.
  double reconstruct() const;
};

/// One row of the convergent table: p_n/q_n and the closest-return distance
/// <q_n theta> = |q_n theta - p_n| (= {q_n theta} for n even, 1-{q_n theta}
/// for n odd).
struct Convergent {
  int n = 0;
  long long p = 0;
  long long q = 1;
  double closest_return = 0.0;
};

/// Gauss-map expansion of x in (0,1). Stops early (without error) when the
/// next quotient would exceed 1e9, since doubles cannot certify it; throws
/// NotIrrationalAtPrecision when the remainder underflows to zero (rational
/// input) or fewer than two quotients can be certified.
RotationNumber continued_fraction_expand(double x, int depth);

/// theta with periodically repeated quotient pattern, truncated at depth.
RotationNumber periodic_quotients(const std::vector<long long>& pattern, int depth = 40);

RotationNumber golden_mean(int depth = 40);
RotationNumber silver_mean(int depth = 40);

/// Rows n = 0..n_max. Requires n_max + 1 <= stored quotient count so each row
/// can be checked against 1/q_{n+1}; throws DepthExceeded otherwise.
std::vector<Convergent> convergents_and_returns(const RotationNumber& rot, int n_max);

/// All convergents the stored quotients support (n = 0..K-1).
std::vector<Convergent> all_convergents(const RotationNumber& rot);

struct BoundedTypeResult {
  bool bounded = false;
  int first_violation = -1;  // 1-based quotient index, -1 if none
};

BoundedTypeResult is_bounded_type(const RotationNumber& rot, long long B);

}  // namespace siegellab
