#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace rem {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(worker_id) on `jobs` workers. Workers are expected to stride over
/// a shared index range (worker w handles w, w+jobs, ...) and to accumulate
/// into per-worker state; the caller merges results in worker order so the
/// outcome does not depend on scheduling.
template <class Fn>
void run_workers(unsigned jobs, Fn&& fn) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1) {
    fn(0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

}  // namespace rem
