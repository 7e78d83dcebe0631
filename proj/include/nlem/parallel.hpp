#ifndef NLEM_PARALLEL_HPP
#define NLEM_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace nlem {

/// Runs fn(i) for i in [0, count) across the given number of worker threads
/// (0 picks the hardware concurrency). Work items are claimed atomically, so
/// the schedule varies but each item runs exactly once; callers must make
/// items independent and write to disjoint state. The first exception thrown
/// by any item is rethrown on the calling thread after all workers finish.
inline void parallel_for(Eigen::Index count, unsigned threads,
                         const std::function<void(Eigen::Index)>& fn) {
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers == 1 || count <= 1) {
    for (Eigen::Index i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<Eigen::Index> next(0);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const Eigen::Index i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
        next.store(count);  // stop handing out work
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace nlem

#endif  // NLEM_PARALLEL_HPP
