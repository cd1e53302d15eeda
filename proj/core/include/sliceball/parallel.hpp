#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sliceball {

/// Worker count: min(hardware, SLICEBALL_THREADS) with SLICEBALL_THREADS=1
/// forcing serial execution. Cached after the first call.
std::size_t worker_count();

/// Runs fn(begin, end, chunk_index) over fixed-size chunks of [0, n).
/// Chunk boundaries do not depend on the worker count, so per-chunk results
/// combined in chunk order are reproducible under any parallelism.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t chunk_size, Fn&& fn) {
  if (n == 0) {
    return;
  }
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  const std::size_t workers = std::min(worker_count(), n_chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::size_t begin = c * chunk_size;
      fn(begin, std::min(begin + chunk_size, n), c);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= n_chunks) {
          return;
        }
        const std::size_t begin = c * chunk_size;
        fn(begin, std::min(begin + chunk_size, n), c);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace sliceball
