#pragma once

#include <cstddef>
#include <functional>

namespace df {

// Resolves a worker count: explicit value > DEPTHFORGE_THREADS env >
// hardware concurrency. 0 means "auto".
int resolve_threads(int requested);

// Runs fn over [0, n) split into contiguous chunks, one chunk per worker.
// Workers write to disjoint outputs only; results must not depend on the
// chunking, so any thread count yields identical data.
void parallel_for(size_t n, int threads,
                  const std::function<void(size_t begin, size_t end)>& fn);

}  // namespace df
