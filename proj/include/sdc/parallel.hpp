#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace sdc {

/// Worker count: `requested` if non-zero, else SDC_THREADS if set and
/// non-zero, else the hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Calls body(begin, end) over disjoint chunks covering [0, count). Chunks
/// may run concurrently; callers must write to disjoint outputs.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// Seed for an independent random stream, a pure function of
/// (seed, stream, index). Used so that results never depend on how work is
/// split between threads.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

}  // namespace sdc
