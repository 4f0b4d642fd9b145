#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace perclab {

// Worker count: explicit request > PERCLAB_WORKERS > hardware.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PERCLAB_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static contiguous block partition of [0, count). Each worker walks its own
// block in index order; callers keep results deterministic by accumulating
// into per-worker state with order-insensitive (integer) sums or by indexed
// writes. fn(worker_id, index).
template <typename Fn>
void parallel_for(std::int64_t count, int workers, Fn&& fn) {
    workers = std::max(1, std::min<std::int64_t>(workers, count > 0 ? count : 1));
    if (workers == 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(0, i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([w, lo, hi, &fn]() {
            for (std::int64_t i = lo; i < hi; ++i) fn(w, i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace perclab
