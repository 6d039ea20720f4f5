#pragma once

#include <cstddef>
#include <functional>

namespace brion {

// BRION_THREADS, else hardware concurrency; at least 1
unsigned thread_count();

// f(i) for i in [0,n) split into contiguous chunks across threads
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace brion
