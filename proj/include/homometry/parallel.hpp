#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace homometry {

/// Worker count: hardware concurrency, capped by HOMOMETRY_THREADS if set.
inline std::size_t thread_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HOMOMETRY_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
        } catch (...) {
        }
    }
    return n;
}

/// Runs body(worker, begin, end) over contiguous chunks of [0, n). Callers
/// must make the combined result independent of the chunking.
template <class Body>
void parallel_chunks(std::size_t n, Body body) {
    const std::size_t workers = std::min(thread_count(), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        body(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(n, w * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([=, &body] { body(w, lo, hi); });
    }
}

}  // namespace homometry
