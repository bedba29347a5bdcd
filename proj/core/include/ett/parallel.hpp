#pragma once

#include <cstdint>

namespace ett {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Number of workers used by all fork-join primitives in this library.
// Defaults to the ETT_WORKERS environment variable, falling back to
// hardware concurrency.
int worker_count();

// workers <= 0 resets to the default.
void set_worker_count(int workers);

namespace detail {
constexpr i64 kSequentialCutoff = 2048;
}

// Static partitioning; all outputs must be written to disjoint indices
// (or via monotone atomic updates) so results are worker-count independent.
template <class F>
void parallel_for(i64 n, F&& body) {
  if (worker_count() <= 1 || n < detail::kSequentialCutoff) {
    for (i64 i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for num_threads(worker_count()) schedule(static)
  for (i64 i = 0; i < n; ++i) body(i);
}

// Dynamic scheduling for loops with skewed per-iteration cost (e.g. tree
// walks). Only safe for bodies whose side effects are idempotent.
template <class F>
void parallel_for_balanced(i64 n, F&& body) {
  if (worker_count() <= 1 || n < 64) {
    for (i64 i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 16)
  for (i64 i = 0; i < n; ++i) body(i);
}

}  // namespace ett
