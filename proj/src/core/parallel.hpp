#pragma once

#include <cstddef>
#include <functional>

namespace autoseq {

// Resolves a requested worker count: n > 0 is taken as-is, n <= 0 falls back
// to the AUTOSEQ_THREADS environment variable, then to the hardware count.
size_t resolve_threads(int requested);

// Runs fn(i) for i in [0, count) across a transient worker group. Work is
// split into contiguous blocks so results written to per-index slots are
// identical to a sequential run. Exceptions from workers are rethrown.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

// Block variant: fn(begin, end) per contiguous chunk, for loops that keep
// per-chunk scratch state.
void parallel_blocks(size_t count, int threads,
                     const std::function<void(size_t, size_t)>& fn);

} // namespace autoseq
