#pragma once

#include <cstddef>
#include <functional>

namespace gaussfit {

// Number of worker threads to use for `count` independent items.  Reads the
// GAUSSFIT_THREADS environment variable on every call; 0 or unset means pick
// automatically.  Never returns less than 1.
int thread_budget(std::size_t count);

// Runs fn(i) for i in [0, count) on up to thread_budget(count) threads.
// Work is split into contiguous index ranges, so writes to index-addressed
// buffers are deterministic regardless of the thread count.  The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn);

}  // namespace gaussfit
