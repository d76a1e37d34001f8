#include "peakonlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pklab {

std::size_t max_threads() {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PEAKONLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      cap = std::min(cap, static_cast<std::size_t>(v));
  }
  return cap;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& block) {
  const std::size_t workers = std::min(max_threads(), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 256) {
    block(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&block, lo, hi] { block(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace pklab
