#pragma once

#include <cstddef>
#include <functional>

namespace ptfopt {

// Worker count: PTFOPT_THREADS if set (clamped to [1, 256]), otherwise the
// hardware concurrency. Read on every call so tests can adjust the env var.
int thread_count();

// Splits [0, n) into at most thread_count() contiguous chunks and runs
// fn(begin, end, chunk_index) on one thread per chunk. The partition depends
// only on n and the worker count, so reductions that combine per-chunk
// results in chunk order are deterministic for a fixed configuration.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, int)>& fn);

}  // namespace ptfopt
