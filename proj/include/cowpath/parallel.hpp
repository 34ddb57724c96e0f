#pragma once

#include <cstddef>
#include <functional>

namespace cowpath {

/// Runs fn(begin, end) over a partition of [0, n) using `workers` threads
/// (inline when workers <= 1). Callers must make per-index work independent
/// and reductions order-free; every sampling loop here seeds by item index,
/// so the partition never shows up in the results.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace cowpath
