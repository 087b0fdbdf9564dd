#pragma once

#include <cstddef>
#include <functional>

namespace shufalg {

// worker count: hardware concurrency, capped by SHUFFLE_THREADS when set
unsigned thread_budget();

// runs body(i) for i in [0, n); each index runs exactly once; nested calls run serially
void parallel_for(size_t n, const std::function<void(size_t)>& body, unsigned max_threads = 0);

}  // namespace shufalg
