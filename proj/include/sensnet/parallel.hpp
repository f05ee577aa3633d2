#pragma once

#include <functional>

namespace sensnet {

// Requested worker count, 0 meaning one per hardware thread.
int resolve_threads(int requested);

// Splits [0, n) into contiguous chunks and runs `body(lo, hi)` on each, one
// chunk per worker. Results must be written to per-index or per-chunk slots
// so the outcome does not depend on the worker count.
void parallel_chunks(long long n, int threads,
                     const std::function<void(long long, long long)>& body);

}  // namespace sensnet
