#pragma once

#include <cstddef>
#include <functional>

namespace ncwave {

/// Run fn(i) for i in [0, n) across up to `workers` threads (0 = automatic,
/// honoring NCWAVE_THREADS). Blocks until done; exceptions rethrow in the
/// caller. Work items must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t workers = 0);

} // namespace ncwave
