#pragma once

#include <cstdint>
#include <functional>

namespace ternmin {

/// Worker count to use: `requested` if nonzero, else $TERNMIN_THREADS, else
/// the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Splits [0, n) into contiguous blocks and runs body(begin, end, worker) on
/// each block. Blocks are assigned to workers deterministically; the call
/// returns after every block finished and rethrows the first exception.
void parallel_for(std::uint64_t n, unsigned threads,
                  const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

} // namespace ternmin
