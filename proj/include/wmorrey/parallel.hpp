#pragma once

#include <cstddef>
#include <functional>

namespace wmorrey {

/// Worker count used by parallel_for; 1 (the default) runs inline.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Calls body(i) for i in [0, count). Each index is written by exactly one
/// worker, so callers that store per-index results stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace wmorrey
