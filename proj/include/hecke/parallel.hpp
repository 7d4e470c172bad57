// Fixed-order parallel map over an index range.  The worker count is capped
// by HECKE_FORGE_THREADS; results are reduced by the caller in index order so
// output does not depend on scheduling.
#pragma once

#include <cstddef>
#include <vector>
#include <functional>

namespace hecke {

// HECKE_FORGE_THREADS if set to a positive integer, else the hardware count.
int worker_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

}  // namespace hecke
