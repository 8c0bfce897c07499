#pragma once

#include <cstddef>
#include <functional>

namespace spin7 {

/// Worker count: SPIN7_THREADS when set, hardware concurrency otherwise.
unsigned thread_budget();

/// Run f(lo, hi) over a chunked partition of [0, count) across the thread
/// budget. Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& f);

}  // namespace spin7
