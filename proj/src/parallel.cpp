#include "gaussfit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gaussfit {

namespace {

int env_thread_cap() {
  const char* raw = std::getenv("GAUSSFIT_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || value < 0) return 0;  // malformed or negative: auto
  return static_cast<int>(value);
}

}  // namespace

int thread_budget(std::size_t count) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  // Tiny batches are not worth spreading out.
  const std::size_t per_thread = 256;
  const std::size_t useful = std::max<std::size_t>(1, count / per_thread);
  int budget = static_cast<int>(std::min<std::size_t>(hw, useful));
  const int cap = env_thread_cap();
  if (cap > 0) budget = std::min(budget, cap);
  return std::max(1, budget);
}

void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const int workers = thread_budget(count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    try {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::size_t lo = chunk;  // range [0, chunk) runs on this thread
  for (int w = 1; w < workers && lo < count; ++w) {
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back(run_range, lo, hi);
    lo = hi;
  }
  run_range(0, std::min(count, chunk));
  for (auto& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gaussfit
