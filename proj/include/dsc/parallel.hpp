#pragma once
// Deterministic task parallelism. Thread count comes from the DSC_THREADS
// environment variable (default 1). Work items write to slots indexed by
// item, and every random routine inside an item must use a stream derived
// from the item index, so outputs never depend on the thread count.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dsc {

inline unsigned thread_count() {
  if (const char* env = std::getenv("DSC_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(thread_count(), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace dsc
