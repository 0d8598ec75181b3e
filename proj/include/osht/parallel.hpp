#pragma once

#include <functional>

namespace osht {

/// Number of worker threads: the OSHT_THREADS environment variable when it
/// is set to a positive integer, otherwise std::thread::hardware_concurrency.
int worker_count();

namespace detail {

/// Runs fn(0) .. fn(n-1), possibly concurrently, and returns once all calls
/// have finished.  Iterations must write to disjoint state; the first
/// exception thrown by any iteration is rethrown to the caller.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace detail
}  // namespace osht
