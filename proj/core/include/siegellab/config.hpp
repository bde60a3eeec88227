#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegellab/cfrac.hpp"

namespace siegellab {

/// Rotation-number specification: exactly one of a named constant, an
/// explicit quotient pattern, or a decimal value.
struct ThetaSpec {
  std::string named;                 // "golden" | "silver"
  std::vector<long long> quotients;  // pattern, repeated to the working depth
  bool has_value = false;
  double value = 0.0;

  /// Builds the rotation number. A quotient list is treated as the repeating
  /// pattern of a bounded-type irrational; a decimal goes through the Gauss
  /// map. Throws ConfigError when nothing (or more than one source) is set.
  RotationNumber resolve(int depth = 40) const;

  bool operator==(const ThetaSpec&) const = default;
};

/// Shared run parameters, JSON layout:
///   {"product": "...", "theta": {...}, "N": n, "n_levels": k, "seed": s}
struct RunConfig {
  std::string product = "douady-ghys";  // "rigid" | "douady-ghys"
  ThetaSpec theta = {.named = "golden", .quotients = {}, .has_value = false, .value = 0.0};
  long long N = 65536;
  int n_levels = 8;
  std::uint64_t seed = 1;

  bool operator==(const RunConfig&) const = default;
};

/// Parses the flat JSON config. Unknown keys are rejected; malformed input
/// reports line and column. Throws ConfigError on every failure.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical form: parse_config(serialize_config(c)) == c, and serializing
/// a parsed config reproduces the canonical bytes.
std::string serialize_config(const RunConfig& config);

}  // namespace siegellab
