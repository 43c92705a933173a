#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace sfab {

// Worker count from SFAB_THREADS, else the hardware concurrency.
unsigned worker_count();

// Runs f(begin, end) over [0, n) split into contiguous chunks.
void parallel_chunks(size_t n, size_t chunk, const std::function<void(size_t, size_t)>& f);

// Fold of body(i, acc) over [0, n).  Chunk boundaries depend only on n,
// and chunk results are combined pairwise in a fixed order, so the result
// does not depend on the number of workers.
template <class T, class Body>
T deterministic_reduce(size_t n, const T& zero, Body&& body) {
  constexpr size_t kChunk = 1024;
  const size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<T> part(chunks, zero);
  parallel_chunks(chunks, 1, [&](size_t b, size_t e) {
    for (size_t c = b; c < e; ++c) {
      const size_t hi = std::min(n, (c + 1) * kChunk);
      for (size_t i = c * kChunk; i < hi; ++i) body(i, part[c]);
    }
  });
  if (part.empty()) return zero;
  for (size_t width = 1; width < part.size(); width *= 2)
    for (size_t i = 0; i + width < part.size(); i += 2 * width) part[i] += part[i + width];
  return part[0];
}

template <class T, class F>
T deterministic_sum(size_t n, F&& f, const T& zero = T()) {
  return deterministic_reduce(n, zero, [&](size_t i, T& acc) { acc += f(i); });
}

}  // namespace sfab
