#include "deckforge/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace deckforge {

void parallel_for_each(const std::vector<size_t>& items, int workers,
                       const std::function<void(size_t)>& fn) {
  if (items.empty()) return;
  if (workers < 1) workers = 1;
  const size_t n = items.size();
  if (workers == 1 || n == 1) {
    // Exceptions propagate in item order by construction.
    for (size_t i = 0; i < n; ++i) fn(items[i]);
    return;
  }

  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> cursor{0};
  auto body = [&] {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      try {
        fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  const size_t count = std::min<size_t>(static_cast<size_t>(workers), n);
  pool.reserve(count);
  for (size_t t = 0; t < count; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();

  for (size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
}

}  // namespace deckforge
