#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace boxed_bertrand {

inline constexpr const char* kThreadsEnvVar = "BOXED_BERTRAND_THREADS";

// requested > 0 wins; otherwise $BOXED_BERTRAND_THREADS; otherwise the
// hardware concurrency. Always >= 1.
unsigned resolve_threads(unsigned requested = 0);

// Splits [0, count) into `workers` contiguous slices and runs
// body(begin, end, worker) on each. Exceptions from workers are rethrown.
template <typename Body>
void parallel_slices(std::size_t count, unsigned workers, Body&& body) {
  if (workers <= 1 || count < 2) {
    body(std::size_t{0}, count, 0u);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace boxed_bertrand
