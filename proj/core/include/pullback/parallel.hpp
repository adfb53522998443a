#pragma once

#include <cstddef>
#include <functional>

namespace pullback {

/// Worker count from PULLBACKLAB_THREADS (0 or unset: hardware concurrency).
std::size_t thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads.
/// Indices are handed out in contiguous blocks; callers write results by
/// index so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pullback
