#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coeffbounds {

/// Runs body(i, worker) for i in [0, count) on up to `threads` workers. Work
/// is handed out dynamically, so bodies must write to slots owned by i or by
/// the worker. The exception from the lowest failing index is rethrown.
template <class Body>
void parallel_for(std::uint64_t count, int threads, Body body) {
  const int workers = static_cast<int>(std::min<std::uint64_t>(count, std::max(threads, 1)));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::exception_ptr error;
  std::uint64_t error_index = count;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t i = next++; i < count; i = next++) {
          try {
            body(i, w);
          } catch (...) {
            std::lock_guard lock(mu);
            if (i < error_index) {
              error_index = i;
              error = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace coeffbounds
