#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace levicert {

/// Worker count from LEVICERT_THREADS, else hardware concurrency.
inline unsigned thread_count() {
  if (const char *env = std::getenv("LEVICERT_THREADS")) {
    try {
      const auto n = std::stoul(env);
      if (n > 0)
        return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(i). Results land in index order, so any reduction over `out`
/// is independent of the thread count. The first exception thrown by any
/// worker is rethrown here.
template <class T, class Fn> std::vector<T> parallel_map(std::size_t count, Fn &&fn) {
  std::vector<T> out(count);
  const auto workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers)
          out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto &t : pool)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

} // namespace levicert
