#include "spin7/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spin7 {

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPIN7_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min(hw * 4, static_cast<unsigned>(v));
  }
  return hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& f) {
  if (count == 0) return;
  unsigned workers = std::min<std::size_t>(thread_budget(), count);
  if (workers <= 1) {
    f(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    std::size_t lo = static_cast<std::size_t>(t) * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        f(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace spin7
