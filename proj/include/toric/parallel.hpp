#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toric {

/// Hardware concurrency, at least 1.
inline int default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) on up to `threads` workers pulling
/// fixed-size chunks. The first exception thrown by any worker is rethrown.
/// Callers make results deterministic by writing into per-index slots.
template <class Body>
void parallel_for(std::uint64_t count, int threads, Body&& body) {
  threads = std::max(1, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (std::uint64_t(threads) * 8));
  std::uint64_t next = 0;
  std::mutex mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::uint64_t begin;
      {
        std::lock_guard lock(mutex);
        if (next >= count || error) return;
        begin = next;
        next = std::min(count, next + chunk);
      }
      const std::uint64_t end = std::min(count, begin + chunk);
      try {
        for (std::uint64_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto workers = static_cast<std::uint64_t>(threads) < count ? threads : static_cast<int>(count);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace toric
