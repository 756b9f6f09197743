#pragma once

#include <cstddef>
#include <functional>

namespace gibbs {

/// Worker cap: GIBBS_PARTITION_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Iterations must be independent; callers
/// write results into per-index slots so the outcome does not depend on the
/// number of workers. Nested calls from inside a worker run serially.
/// The first exception thrown by any iteration is rethrown after all workers
/// have stopped.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gibbs
