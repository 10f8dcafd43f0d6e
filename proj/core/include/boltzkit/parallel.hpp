#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace boltzkit {

/// Resolves a requested thread count: values <= 0 mean "use all hardware
/// threads"; the result is always >= 1.
int resolve_threads(int requested);

/// Runs chunk_fn(begin, end) over a static contiguous partition of [0, count)
/// into exactly `threads` chunks (the last chunks may be empty). Chunks other
/// than the first run on freshly spawned std::threads; the first runs on the
/// calling thread. With chunk-disjoint writes the result is independent of
/// the thread count.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& chunk_fn);

/// Fixed-shape pairwise summation. Deterministic for a given input order and
/// independent of any threading in the caller, which makes it the reduction
/// used for every norm and integral in the library.
double pairwise_sum(std::span<const double> values);

}  // namespace boltzkit
