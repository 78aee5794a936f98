#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace spreadkit {

/// Worker count: SPREADKIT_THREADS when set to a positive integer, else the
/// hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPREADKIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return hw;
}

/// Calls body(begin, end) on disjoint contiguous chunks of [0, count).
/// Chunk boundaries are deterministic for a given worker count.
template <typename Body>
void parallel_chunks(std::size_t count, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += step)
    threads.emplace_back([&body, begin, end = std::min(count, begin + step)] { body(begin, end); });
  for (auto& t : threads) t.join();
}

}  // namespace spreadkit
