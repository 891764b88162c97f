#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace wente {

// Kernels that loop over independent integrals take an Execution flag. The
// serial path is the reference; the parallel path must reproduce it bit for
// bit because every integral is computed by one thread start to finish and
// results are written to fixed slots.
enum class Execution { serial, parallel };

int max_threads() noexcept;

// Runs body(i) for i in [0, count). Parallel iff exec == parallel and the
// library was built with OpenMP. If any iteration throws, the exception of
// the lowest failing index is rethrown after the loop.
template <class Body>
void for_each_index(Execution exec, std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
  auto run = [&](long i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) run(i);
  } else {
    for (long i = 0; i < n; ++i) run(i);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace wente
