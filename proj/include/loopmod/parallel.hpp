#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace loopmod {

/// Worker count for partitionable verifier loops. LOOPMOD_THREADS overrides
/// the hardware default; values below 1 are clamped to 1.
inline int worker_count() {
  if (const char* env = std::getenv("LOOPMOD_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Splits [0, count) into one contiguous chunk per worker and returns the
/// per-chunk results in chunk order, so reductions stay deterministic.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(int count, int workers, Fn&& fn) {
  if (workers > count) workers = count;
  std::vector<Result> results(static_cast<std::size_t>(workers));
  if (workers <= 1) {
    if (count > 0) results[0] = fn(0, count);
    return results;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  const int base = count / workers;
  const int extra = count % workers;
  int begin = 0;
  for (int w = 0; w < workers; ++w) {
    const int len = base + (w < extra ? 1 : 0);
    const int end = begin + len;
    threads.emplace_back([&results, &fn, w, begin, end] { results[static_cast<std::size_t>(w)] = fn(begin, end); });
    begin = end;
  }
  for (std::thread& t : threads) t.join();
  return results;
}

} // namespace loopmod
