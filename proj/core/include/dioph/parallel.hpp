#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dioph {

/// Half-open index range [begin, end).
struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits [0, n) into `chunks` contiguous ranges. The split depends only on
/// `n` and `chunks`, never on the worker count, which is what makes chunked
/// reductions reproducible for any number of workers.
inline std::vector<IndexRange> split_range(std::uint64_t n, std::size_t chunks) {
  chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, std::max<std::uint64_t>(n, 1)));
  std::vector<IndexRange> out;
  out.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    out.push_back({n * c / chunks, n * (c + 1) / chunks});
  }
  return out;
}

/// Runs `fn(chunk_index, range)` for every chunk on up to `workers` threads and
/// returns the per-chunk results in chunk order. Callers reduce that vector
/// sequentially.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(const std::vector<IndexRange>& ranges, unsigned workers, Fn&& fn) {
  std::vector<Result> results(ranges.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(ranges.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) results[i] = fn(i, ranges[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < ranges.size(); i = next++) {
        try {
          results[i] = fn(i, ranges[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace dioph
