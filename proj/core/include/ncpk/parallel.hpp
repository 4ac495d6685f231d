#pragma once

#include <cstddef>
#include <functional>

namespace ncpk {

// Worker count: NCPK_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Calls body(begin, end) on disjoint chunks of [0, count) from up to
// thread_count() threads. Exceptions from workers are rethrown.
void parallel_for(size_t count, const std::function<void(size_t, size_t)>& body);

}  // namespace ncpk
