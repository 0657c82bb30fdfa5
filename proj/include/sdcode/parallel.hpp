#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace sdcode {

// 0 means "use available parallelism".
inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into `chunks` contiguous ranges and runs
// fn(chunk, begin, end) for each, one thread per chunk. Chunk boundaries
// depend only on (total, chunks), so callers that merge per-chunk results
// in chunk order get output independent of scheduling.
template <class Fn>
void parallel_ranges(std::uint64_t total, std::size_t chunks, Fn&& fn) {
  chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, std::max<std::uint64_t>(total, 1)));
  auto bounds = [&](std::size_t c) { return total / chunks * c + std::min<std::uint64_t>(c, total % chunks); };
  if (chunks == 1) {
    fn(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          fn(c, bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sdcode
