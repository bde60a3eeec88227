#include "siegellab/cfrac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "siegellab/numeric.hpp"

namespace siegellab {

namespace {

constexpr double kQuotientCeiling = 1e9;

double evaluate_quotients(const std::vector<long long>& a) {
  double x = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    x = 1.0 / (static_cast<double>(*it) + x);
  }
  return x;
}

}  // namespace

long long RotationNumber::bound() const {
  long long b = 0;
  for (long long a : quotients) b = std::max(b, a);
  return b;
}

double RotationNumber::reconstruct() const { return evaluate_quotients(quotients); }

RotationNumber continued_fraction_expand(double x, int depth) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("continued_fraction_expand: x must lie in (0,1)");
  }
  if (depth < 2) {
    throw std::domain_error("continued_fraction_expand: depth must be at least 2");
  }
  std::vector<long long> a;
  double y = x;
  for (int k = 0; k < depth; ++k) {
    double inv = 1.0 / y;
    if (inv > kQuotientCeiling) break;  // precision-limited length
    double fl = std::floor(inv);
    double rem = inv - fl;
    a.push_back(static_cast<long long>(fl));
    if (rem == 0.0) {
      if (static_cast<int>(a.size()) < depth) {
        throw NotIrrationalAtPrecision(
            "continued_fraction_expand: remainder underflowed to zero; input is "
            "rational at working precision");
      }
      break;
    }
    y = rem;
  }
  if (a.size() < 2) {
    throw NotIrrationalAtPrecision(
        "continued_fraction_expand: fewer than two quotients certifiable");
  }
  return RotationNumber{x, std::move(a)};
}

RotationNumber periodic_quotients(const std::vector<long long>& pattern, int depth) {
  if (pattern.empty()) throw std::domain_error("periodic_quotients: empty pattern");
  for (long long a : pattern) {
    if (a < 1) throw std::domain_error("periodic_quotients: quotients must be >= 1");
  }
  if (depth < 2) throw std::domain_error("periodic_quotients: depth must be at least 2");
  std::vector<long long> a;
  a.reserve(depth);
  for (int k = 0; k < depth; ++k) a.push_back(pattern[k % pattern.size()]);
  // Long periodic tail: extend well past depth so the truncation error in the
  // evaluated value is far below double precision.
  std::vector<long long> ext = a;
  for (int k = depth; k < depth + 60; ++k) ext.push_back(pattern[k % pattern.size()]);
  return RotationNumber{evaluate_quotients(ext), std::move(a)};
}

RotationNumber golden_mean(int depth) { return periodic_quotients({1}, depth); }

RotationNumber silver_mean(int depth) { return periodic_quotients({2}, depth); }

std::vector<Convergent> convergents_and_returns(const RotationNumber& rot, int n_max) {
  const int K = static_cast<int>(rot.quotients.size());
  if (n_max < 0) throw std::domain_error("convergents_and_returns: n_max < 0");
  // Row n uses q_{n+1} in its validity contract, so a_{n+1} must be stored.
  if (n_max + 1 > K) {
    throw DepthExceeded("convergents_and_returns: n_max exceeds stored quotient depth");
  }
  std::vector<Convergent> table;
  table.reserve(n_max + 1);
  long long p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  long long p = 0, q = 1;            // p_0, q_0
  const double theta = rot.value;
  for (int n = 0; n <= n_max; ++n) {
    // <q_n theta> = |q_n theta - p_n| with the product split via fma.
    double t = static_cast<double>(q) * theta;
    double e = std::fma(static_cast<double>(q), theta, -t);
    double ret = std::abs((t - static_cast<double>(p)) + e);
    table.push_back(Convergent{n, p, q, ret});
    if (n == n_max) break;
    long long a = rot.quotients[n];  // a_{n+1}
    if (q > (std::numeric_limits<long long>::max() - q_prev) / std::max<long long>(a, 1)) {
      throw DepthExceeded("convergents_and_returns: convergent denominator overflow");
    }
    long long q_next = q_prev + a * q;
    long long p_next = p_prev + a * p;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return table;
}

std::vector<Convergent> all_convergents(const RotationNumber& rot) {
  return convergents_and_returns(rot, static_cast<int>(rot.quotients.size()) - 1);
}

BoundedTypeResult is_bounded_type(const RotationNumber& rot, long long B) {
  for (size_t i = 0; i < rot.quotients.size(); ++i) {
    if (rot.quotients[i] > B) {
      return BoundedTypeResult{false, static_cast<int>(i + 1)};
    }
  }
  return BoundedTypeResult{true, -1};
}

}  // namespace siegellab
