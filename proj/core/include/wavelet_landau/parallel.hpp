#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wavelet_landau {

// Worker count: hardware concurrency, optionally capped by the
// WAVELET_LANDAU_THREADS environment variable (clamped to >= 1).
inline int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("WAVELET_LANDAU_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

// Chunked parallel loop over [0, n).  Each index is visited exactly once;
// callers write results into preallocated slots, so the outcome does not
// depend on the thread count.
template <class F>
void parallel_for(int n, F&& body) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([n, workers, w, &body] {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace wavelet_landau
