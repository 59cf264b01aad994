#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nilband {

/// Process-wide worker count. Defaults to NILBAND_THREADS when set, otherwise
/// the hardware concurrency; the CLI --threads flag overrides both.
int thread_count();
void set_thread_count(int count);

/// Runs fn(i) for i in [0, count) across the configured workers. Chunking is
/// deterministic but callers must not depend on execution order; results go
/// into preallocated slots and are combined with pairwise_sum so output bytes
/// do not depend on the thread count.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn);

/// Pairwise tree reduction; fixed association order independent of threads.
double pairwise_sum(std::span<const double> values);
inline double pairwise_sum(const std::vector<double>& values) {
  return pairwise_sum(std::span<const double>(values));
}

/// Shortest-round-trip decimal form used by every report writer.
std::string format_double(double value);

}  // namespace nilband
