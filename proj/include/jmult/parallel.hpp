#ifndef JMULT_PARALLEL_HPP
#define JMULT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace jmult {

inline int defaultJobs() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(0..n-1). Work items must write only to their own slot; results are
// then independent of scheduling, so parallel and serial runs agree bit-exactly.
// The first exception thrown by any item is rethrown after all threads join.
inline void parallelFor(long n, int jobs, const std::function<void(long)>& fn) {
  if (n <= 0) return;
  if (jobs <= 0) jobs = defaultJobs();
  if (jobs == 1 || n == 1) {
    for (long k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr firstError{nullptr};
  std::mutex errMutex;
  auto worker = [&]() {
    for (;;) {
      long k = next.fetch_add(1);
      if (k >= n || failed.load()) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errMutex);
        if (!failed.exchange(true)) firstError = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int nt = static_cast<int>(std::min<long>(jobs, n));
  threads.reserve(nt);
  for (int t = 0; t < nt; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (failed.load() && firstError) std::rethrow_exception(firstError);
}

}  // namespace jmult

#endif
