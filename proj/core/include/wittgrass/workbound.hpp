#pragma once

#include <cstdint>
#include <string>

namespace wittgrass {

inline constexpr std::uint64_t kDefaultWorkBound = 100000000;

// WITTGRASS_WORKBOUND if set to a positive integer, else kDefaultWorkBound.
std::uint64_t work_bound();

// Throws WorkBoundExceeded if amount > work_bound().
void check_work(std::uint64_t amount, const std::string& what);

// Saturating helpers for candidate counts.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, int e);

// Runs body(i) for i in [0, tasks) on up to `workers` threads; the first
// exception thrown by any task is rethrown after all threads join.
template <class F>
void parallel_for(std::size_t tasks, int workers, F&& body);

}  // namespace wittgrass

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wittgrass {

template <class F>
void parallel_for(std::size_t tasks, int workers, F&& body) {
  if (workers < 1) workers = 1;
  if (workers == 1 || tasks <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(tasks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(workers), tasks);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace wittgrass
