#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hilbcenter {

/// Runs fn(0) ... fn(count-1) on up to `jobs` threads with static block
/// assignment.  Callers write results into per-index slots, so the outcome
/// is independent of scheduling.  The first exception thrown by any worker
/// is rethrown on the calling thread.
template <typename F>
void parallel_for(int jobs, std::size_t count, F&& fn) {
  if (count == 0) return;
  std::size_t workers = jobs <= 1 ? 1 : std::min<std::size_t>(jobs, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hilbcenter
