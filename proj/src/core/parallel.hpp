// Tiny fork-join helper for the embarrassingly parallel grid sweeps.
// Thread count comes from WPMIN_THREADS when set, otherwise the hardware,
// clamped to something sane.  Work is split into fixed contiguous chunks so
// results are deterministic regardless of scheduling.

#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace wpmin {

inline int thread_count() {
  if (const char* env = std::getenv("WPMIN_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v > 64 ? 64 : v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return hw > 8 ? 8 : static_cast<int>(hw);
}

template <class Fn> // void(int begin, int end, int chunk_index)
void parallel_chunks(int n, Fn&& fn) {
  int threads = thread_count();
  if (threads <= 1 || n < 2 * threads) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  int per = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int begin = t * per;
    int end = begin + per < n ? begin + per : n;
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, t] { fn(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

} // namespace wpmin
