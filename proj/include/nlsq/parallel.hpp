#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace nlsq {

/// Runs fn(i) for i in [0, n) on a small thread pool. Results must be written
/// to index-addressed storage by the caller, which keeps the outcome
/// independent of scheduling. Rethrows the first exception after joining.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  int n_threads = int(std::min<unsigned>(hw ? hw : 1, unsigned(n)));
  if (n_threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace nlsq
