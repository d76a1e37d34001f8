#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <utility>
#include <vector>

#include "peakonlab/parallel.hpp"

using namespace pklab;

TEST_SUITE("parallel") {
  TEST_CASE("thread cap follows the environment variable") {
    setenv("PEAKONLAB_THREADS", "1", 1);
    CHECK(max_threads() == 1);
    setenv("PEAKONLAB_THREADS", "2", 1);
    CHECK(max_threads() <= 2);
    setenv("PEAKONLAB_THREADS", "not-a-number", 1);
    CHECK(max_threads() >= 1);  // garbage is ignored, hardware default
    unsetenv("PEAKONLAB_THREADS");
    CHECK(max_threads() >= 1);
  }

  TEST_CASE("every index is visited exactly once") {
    const std::size_t n = 10007;  // prime, so blocks cannot tile evenly
    std::vector<std::atomic<int>> hits(n);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) hits[i].fetch_add(1);
    });
    for (std::size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
  }

  TEST_CASE("small loops run serially and still cover everything") {
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) ++hits[i];
    });
    for (int h : hits) CHECK(h == 1);
  }

  TEST_CASE("zero-length loops visit nothing") {
    std::size_t visited = 0;
    parallel_for(0, [&](std::size_t lo, std::size_t hi) { visited += hi - lo; });
    CHECK(visited == 0);
  }

  TEST_CASE("block boundaries are deterministic") {
    auto record = [] {
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      std::mutex m;
      parallel_for(5000, [&](std::size_t lo, std::size_t hi) {
        std::lock_guard<std::mutex> lock(m);
        blocks.emplace_back(lo, hi);
      });
      std::sort(blocks.begin(), blocks.end());
      return blocks;
    };
    CHECK(record() == record());
  }
}
