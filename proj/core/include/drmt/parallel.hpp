#pragma once

#include <functional>

namespace drmt {

/// Worker-pool width: DISORDER_RMT_THREADS when set, else the hardware
/// concurrency.
int thread_budget();

/// Runs f(0), ..., f(n-1) across the pool. Each index owns its own random
/// stream, so results are independent of the worker count.
void parallel_for(int n, const std::function<void(int)>& f);

} // namespace drmt
