#pragma once

#include <cstddef>
#include <functional>

namespace steklov {

/// Worker count: hardware concurrency, capped by STEKLOV_THREADS when set
/// to a positive integer.
unsigned worker_count();

/// Calls body(i) for i in [0, n). Each index is visited exactly once;
/// results must be written to per-index slots so the outcome does not
/// depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace steklov
