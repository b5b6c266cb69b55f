#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace torus {

// Worker cap: TORUS_STRATA_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
inline std::size_t thread_budget() {
  if (const char* env = std::getenv("TORUS_STRATA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::size_t(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Run fn(i) for i in [0, count) across the thread budget. fn must confine its
// writes to slot i so the result is independent of the schedule. The first
// exception, if any, is rethrown after all workers join.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min(thread_budget(), count);
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex err_mu;
  std::exception_ptr err;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace torus
