#pragma once

#include <cstddef>
#include <functional>

namespace hz {

/// Worker count used by grid scans and profile builders. Defaults to the
/// number of logical cores; 0 restores the default.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
/// one chunk per worker. Chunk boundaries depend only on n and the worker
/// count, and callers write into pre-sized per-index slots, so output is
/// identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hz
