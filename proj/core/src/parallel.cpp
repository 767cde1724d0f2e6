#include "trtlb/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace trtlb {

void parallel_for(std::int64_t jobs, int threads,
                  const std::function<void(std::int64_t)>& fn) {
  if (jobs <= 0) return;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(jobs, threads < 1 ? 1 : threads));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const std::int64_t i = next.fetch_add(1);
        if (i >= jobs) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

int default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace trtlb
