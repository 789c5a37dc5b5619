#pragma once

#include <cstddef>
#include <functional>

namespace feyntope {

// Worker cap: FEYNTOPE_THREADS when set, hardware concurrency otherwise.
int worker_count();

// Runs f(i) for i in [0, n) on up to worker_count() threads.  Results must
// be written to caller-owned slots; the reduction order is then up to the
// caller, which keeps outputs deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace feyntope
