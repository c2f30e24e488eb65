#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace graphdeck {

// Thread count resolution: explicit argument > GRAPHDECK_THREADS > hardware.
inline int resolve_threads(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GRAPHDECK_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [begin, end) across worker threads, stealing indices
// from a shared counter. fn must only write to its own index's slot; callers
// merge per-index results in index order, which keeps every reduction
// deterministic regardless of scheduling.
template <class Fn>
void parallel_for(int begin, int end, int threads, Fn&& fn) {
  const int total = end - begin;
  if (total <= 0) return;
  int workers = std::min(resolve_threads(threads), total);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<int> next{begin};
  std::atomic<bool> failed{false};
  std::atomic_flag error_claimed = ATOMIC_FLAG_INIT;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= end || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!error_claimed.test_and_set()) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace graphdeck
