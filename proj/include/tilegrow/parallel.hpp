#pragma once

#include <cstddef>
#include <functional>

namespace tilegrow {

/// Worker cap for library-internal loops. 0 means "use hardware concurrency".
void set_thread_count(int n);
int thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunks are processed
/// concurrently; callers write results into per-index slots so the output does not
/// depend on the number of workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace tilegrow
