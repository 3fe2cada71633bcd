#pragma once

#include <cstdint>
#include <functional>

namespace vdge {

// Runs body(i) for i in [0, count) on up to `threads` workers (<= 0 means
// hardware concurrency). Tasks must be independent; callers that need
// deterministic output write into index-addressed slots and reduce in
// order afterwards. The first exception thrown by any task is rethrown.
void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body);

}  // namespace vdge
