#pragma once

// Worker pool helpers for the exhaustive scans. Results never depend on the
// worker count: parallel_find_first returns the hit with the smallest index,
// exactly as a sequential ascending loop would.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace indep {

// 0 is clamped to 1. Call before starting work; not meant to change mid-scan.
void set_worker_count(unsigned workers);
unsigned worker_count();

namespace detail {

template <class F>
void run_workers(unsigned workers, F&& body) {
  if (workers <= 1) {
    body();
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        body();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// Calls f(i) for every i in [0, count), distributed over the workers.
template <class F>
void parallel_for(std::uint64_t count, F&& f) {
  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  detail::run_workers(workers, [&] {
    for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
  });
}

// Returns f(i) for the least i in [0, count) where f yields a value.
template <class T, class F>
std::optional<T> parallel_find_first(std::uint64_t count, F&& f) {
  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (auto hit = f(i)) return hit;
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best_index{count};
  std::mutex best_mutex;
  std::optional<T> best;
  detail::run_workers(workers, [&] {
    for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      if (i >= best_index.load(std::memory_order_relaxed)) return;
      if (auto hit = f(i)) {
        std::lock_guard lock(best_mutex);
        if (i < best_index.load()) {
          best_index.store(i);
          best = std::move(hit);
        }
        return;
      }
    }
  });
  return best;
}

}  // namespace indep
