#pragma once

#include <cstddef>
#include <functional>

namespace stealth {

// Worker count: STEALTH_PLACE_THREADS if set to a positive integer, otherwise
// std::thread::hardware_concurrency() (at least 1).
std::size_t thread_count();

// Splits [0, count) into contiguous chunks and calls body(begin, end, chunk)
// for each one, possibly concurrently. Chunk boundaries depend only on
// `count` and `chunks`, never on the thread count, so callers that reduce
// per-chunk results in chunk order get identical answers serially and in
// parallel.
void parallel_for(std::size_t count, std::size_t chunks,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace stealth
