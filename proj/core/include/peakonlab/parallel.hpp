#pragma once

#include <cstddef>
#include <functional>

namespace pklab {

// Worker cap: hardware concurrency, clamped by the PEAKONLAB_THREADS
// environment variable when it is set to a positive integer.
std::size_t max_threads();

// Split [0, n) into contiguous blocks, one per worker.  Blocks are
// disjoint, so writes to distinct indices stay deterministic.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& block);

}  // namespace pklab
