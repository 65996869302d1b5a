#pragma once

// Chunked parallel execution with deterministic merge order: workers fill
// per-chunk slots, the caller consumes slots in chunk order.

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace nilab {

// Runs fn(chunk_index, begin, end) over [0, total) split into roughly equal
// chunks, one per worker. fn must only touch its own chunk's state.
inline void parallel_chunks(uint64_t total, uint32_t threads,
                            const std::function<void(uint32_t, uint64_t, uint64_t)>& fn) {
  if (threads <= 1 || total < 2048) {
    fn(0, 0, total);
    return;
  }
  uint32_t nchunks = threads;
  std::vector<std::thread> pool;
  uint64_t per = (total + nchunks - 1) / nchunks;
  for (uint32_t c = 0; c < nchunks; ++c) {
    uint64_t begin = per * c;
    uint64_t end = begin + per < total ? begin + per : total;
    if (begin >= end) break;
    pool.emplace_back([&, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace nilab
