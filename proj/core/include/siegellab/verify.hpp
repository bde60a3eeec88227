#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegellab/report.hpp"

namespace siegellab {

/// One invariant check: observed value against its reference bound. The pass
/// flag is computed by the check itself (most are observed <= bound).
struct VerifyRow {
  std::string suite;
  std::string check;
  double observed = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Module suites in their canonical run order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite ("all" chains every suite). Deterministic for a fixed seed.
std::vector<VerifyRow> run_verify_suite(const std::string& suite, std::uint64_t seed);

CsvTable verify_csv(const std::vector<VerifyRow>& rows);

int count_failures(const std::vector<VerifyRow>& rows);

}  // namespace siegellab
