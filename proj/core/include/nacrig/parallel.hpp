#pragma once

#include <cstddef>
#include <functional>

namespace nacrig {

// Worker count used by all parallel loops. NACRIG_THREADS caps it;
// unset or 0 means hardware concurrency.
unsigned thread_count();

// Runs fn(begin, end) over disjoint chunks of [0, n), one chunk per worker.
// Chunks are contiguous and in index order, so callers that write into
// pre-sized buffers or concatenate per-chunk results keep deterministic
// output regardless of scheduling.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace nacrig
