#ifndef ZAKLAB_PARALLEL_HPP
#define ZAKLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace zaklab {

// Number of worker threads: hardware concurrency capped by ZAKLAB_THREADS.
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into fixed-size blocks so that
// per-index results are independent of the thread count; callers that reduce
// must write into preallocated slots and reduce serially afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace zaklab

#endif
