#ifndef MMS_EXECUTION_HPP
#define MMS_EXECUTION_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mms {

struct ExecutionOptions {
  unsigned threads = 1;
};

/// Splits [0, count) into at most `threads` contiguous chunks and runs
/// `body(chunk_index, begin, end)` on each. Chunk boundaries depend only on
/// (count, threads), so callers reduce per-chunk results in chunk order.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count));
  if (workers <= 1) {
    body(std::size_t{0}, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t base = count / workers;
  const std::uint64_t extra = count % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + base + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(static_cast<std::size_t>(w), begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::size_t chunk_count(std::uint64_t count, unsigned threads) {
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count)));
}

}  // namespace mms

#endif  // MMS_EXECUTION_HPP
