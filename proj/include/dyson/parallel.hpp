#pragma once

#include <cstdint>
#include <functional>

namespace dyson {

// Runs fn(0..n-1), splitting the index range statically over `threads`
// workers. Each index writes only its own slot, so results are identical for
// every thread count. threads <= 1 runs inline.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn);

// DYSON_RC_THREADS override, else hardware concurrency, else 1.
int default_threads();

} // namespace dyson
