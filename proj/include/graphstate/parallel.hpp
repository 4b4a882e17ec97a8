#pragma once

#include <cstddef>
#include <functional>

namespace graphstate {

// Worker count: GRAPHSTATE_THREADS when set to a positive integer, otherwise
// hardware concurrency, never less than 1.
std::size_t thread_budget();

// Runs fn(begin, end) over a chunked partition of [0, count). Chunk
// boundaries depend only on count and the worker count.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace graphstate
