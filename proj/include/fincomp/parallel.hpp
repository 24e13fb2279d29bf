#pragma once

#include <cstddef>
#include <functional>

namespace fincomp {

/// Runs body(0..count-1) on up to `threads` workers. Each index is handled
/// by exactly one worker and writes only its own slot, so results are
/// identical for any thread count. The first exception thrown by a body is
/// rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

} // namespace fincomp
