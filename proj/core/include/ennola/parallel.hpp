#pragma once

#include <cstddef>
#include <functional>

namespace ennola {

/// Worker count used by parallel_for; 0 or 1 runs inline.
void set_parallelism(unsigned jobs);
unsigned parallelism();

/// Calls body(i) for i in [0, count), spread over parallelism() threads.
/// Exceptions from workers are rethrown (the first one wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ennola
