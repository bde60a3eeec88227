#pragma once

#include <functional>

namespace siegellab {

/// Thread budget: SIEGEL_LAB_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
int thread_budget();

/// Runs fn(i) for i = 0..n-1 across the thread budget. Execution order is
/// unspecified; callers keep results deterministic by writing into
/// index-addressed slots. The first exception from fn stops the sweep and is
/// rethrown after all workers join.
void parallel_for(long long n, const std::function<void(long long)>& fn);

}  // namespace siegellab
