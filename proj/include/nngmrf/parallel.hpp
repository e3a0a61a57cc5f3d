#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nngmrf {

namespace detail {
inline unsigned& thread_limit() {
  static unsigned limit = 0;  // 0 = hardware concurrency
  return limit;
}
}  // namespace detail

inline void set_max_threads(unsigned n) { detail::thread_limit() = n; }

inline unsigned max_threads() {
  const unsigned limit = detail::thread_limit();
  if (limit > 0) return limit;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs body(i) for i in [0, count). Work items must write only to their own
// slot of a result buffer; callers aggregate afterwards in index order, which
// keeps results identical for any thread count.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(max_threads(), count > 0 ? count : 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace nngmrf
