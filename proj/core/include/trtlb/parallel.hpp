// Minimal fork-join helper for independent jobs.
#pragma once

#include <cstdint>
#include <functional>

namespace trtlb {

// Runs fn(0..jobs-1) on up to `threads` worker threads (inline when threads
// <= 1 or jobs == 1).  Jobs are claimed from a shared counter, so the
// assignment is dynamic but the side effects must be index-local.
void parallel_for(std::int64_t jobs, int threads,
                  const std::function<void(std::int64_t)>& fn);

// Hardware concurrency with a sane floor of 1.
int default_thread_count();

}  // namespace trtlb
