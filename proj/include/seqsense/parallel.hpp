#pragma once

#include <cstddef>
#include <functional>

namespace seqsense {

// Worker-count knob for parallel_for (CLI --threads). 0 restores the default
// (hardware concurrency).
void set_max_threads(int n);
int max_threads();

// Runs fn(0..n-1) on up to max_threads() workers. Tasks must be independent and
// write only to their own index slot, which keeps results identical to a serial
// run for any thread count. Exceptions are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace seqsense
