#pragma once

#include <cstddef>
#include <functional>

namespace anomdiff {

/// Process-wide worker cap for parallel loops (default: hardware concurrency).
void set_max_threads(int n);
int max_threads();

/// Runs fn(i) for i in [0, n). Work is chunked statically; results must be
/// written to per-index slots so that the outcome is schedule-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace anomdiff
