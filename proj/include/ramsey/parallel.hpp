#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ramsey {

// Runs fn(begin, end) over [0, total) in fixed-size chunks. Chunk boundaries
// depend only on `total` and `chunk_size`, and callers fold the returned
// per-chunk results in chunk order, so the combined outcome is identical for
// every worker count.
template <typename T, typename Fn>
std::vector<T> map_chunks(std::uint64_t total, std::uint64_t chunk_size,
                          int threads, Fn fn) {
  if (chunk_size == 0) chunk_size = 1;
  const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
  std::vector<T> results(nchunks);
  if (nchunks == 0) return results;

  const unsigned hw = std::thread::hardware_concurrency();
  std::uint64_t workers = threads > 0 ? static_cast<std::uint64_t>(threads)
                                      : (hw > 0 ? hw : 1);
  if (workers > nchunks) workers = nchunks;

  if (workers <= 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      results[c] = fn(begin, end);
    }
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&]() {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks || failed.load()) return;
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace ramsey
