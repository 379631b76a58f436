#pragma once

#include <cstddef>
#include <functional>

namespace akr {

/// Name of the environment variable holding the worker count.
inline constexpr const char* kWorkersEnv = "AKROPS_WORKERS";

/// Worker count from AKROPS_WORKERS; 1 (sequential) when unset or invalid.
[[nodiscard]] unsigned worker_count();

/// Calls body(i) for i in [0, count) on up to `workers` threads. Each index
/// runs exactly once; callers write results into slot i so the output order
/// never depends on completion order. The first exception thrown by any
/// body is rethrown after all threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers = worker_count());

}  // namespace akr
