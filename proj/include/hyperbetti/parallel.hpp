#pragma once

#include <cstddef>
#include <functional>

namespace hyperbetti {

/// Threads actually used for a requested job count (0 = hardware concurrency).
int resolve_jobs(int jobs);

// Runs fn(index, worker) for every index in [0, count) on `jobs` threads.
// Indices are handed out in chunks; the assignment of index to worker is
// unspecified, so fn must only write worker-local or per-index state. The
// first exception thrown by any worker is rethrown on the calling thread.
void parallel_for_index(std::size_t count, int jobs,
                        const std::function<void(std::size_t, int)>& fn);

} // namespace hyperbetti
