#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rdl {

inline unsigned worker_count(unsigned requested = 0) {
  if (requested) return requested;
  if (const char* env = std::getenv("RDL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return hw > 8 ? 8 : hw;
}

// Chunked parallel loop over [begin, end); fn(i) must be safe for concurrent
// disjoint i. Results must be written to per-index slots so the outcome is
// independent of scheduling.
inline void parallel_for(std::uint64_t begin, std::uint64_t end,
                         const std::function<void(std::uint64_t)>& fn, unsigned threads = 0) {
  const unsigned w = worker_count(threads);
  if (w <= 1 || end - begin < 2 * w) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t total = end - begin;
  const std::uint64_t chunk = (total + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    std::uint64_t lo = begin + t * chunk;
    std::uint64_t hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rdl
