#pragma once

#include <cstddef>
#include <functional>

namespace semiring {

/// Worker cap for data-parallel loops: the SEMIRING_THREADS environment
/// variable when set to a positive integer, hardware concurrency otherwise.
std::size_t thread_cap();

/// Runs fn(0..count-1) across up to thread_cap() threads. Iterations must
/// be independent; results written per index stay deterministic regardless
/// of the worker count. Exceptions from workers are rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace semiring
