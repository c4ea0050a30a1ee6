#pragma once

#include <cstddef>
#include <functional>

namespace qhopf {

/// Worker count from QHOPF_THREADS, else the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n). Work is split into contiguous blocks, so any
/// per-index output written by body is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qhopf
