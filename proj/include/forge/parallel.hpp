#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace forge {

// Worker cap from MOMENT_FORGE_THREADS. Defaults to 1: every documented
// runtime budget is single-core and all results must be reproducible.
inline unsigned thread_count() {
  if (const char* env = std::getenv("MOMENT_FORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

// Runs fn(begin, end) over contiguous chunks of [0, n). Callers must only
// use this for work whose result is independent of the partition (disjoint
// row writes, elementwise minima); that keeps outputs identical for every
// thread-count setting.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), n ? n : 1));
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    if (begin == end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace forge
