#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace deckforge {

/// Runs fn(item) for every item on a bounded pool of `workers` threads.
/// Blocks until all items finish. If any invocation throws, the exception
/// for the smallest item index is rethrown after the pool drains, so the
/// surfaced error does not depend on thread scheduling.
void parallel_for_each(const std::vector<size_t>& items, int workers,
                       const std::function<void(size_t)>& fn);

}  // namespace deckforge
