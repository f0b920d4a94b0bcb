#pragma once

#include <cstddef>
#include <functional>

namespace pancake {

// Worker count for data-parallel loops: PANCAKE_LAB_THREADS when set and
// positive, otherwise the hardware concurrency.
int worker_count();

// Runs fn(i) for every i in [0, count), spreading the indices over the
// workers.  fn must be safe to call concurrently; exceptions from workers are
// rethrown on the calling thread (first one wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pancake
