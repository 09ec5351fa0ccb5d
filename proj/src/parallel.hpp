#pragma once

// Static range partitioning over worker threads. Each worker receives a
// contiguous [begin, end) slice and its worker index; results must not
// depend on the partitioning.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace bctkit::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Fn>
void parallel_ranges(std::uint64_t count, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(count, 1)));
  if (workers == 1) {
    fn(std::uint64_t{0}, count, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
}

}  // namespace bctkit::detail
