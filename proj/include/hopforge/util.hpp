#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hopforge {

// Runs fn(i) for i in [0, count) across up to `threads` workers.
// Worker j takes i = j, j+threads, ... so the split is deterministic.
inline void parallel_for(int count, const std::function<void(int)>& fn, int threads = 0) {
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc ? static_cast<int>(hc) : 1;
    }
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = count;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int j = 0; j < threads; ++j)
        pool.emplace_back([&fn, j, count, threads] {
            for (int i = j; i < count; i += threads) fn(i);
        });
    for (auto& t : pool) t.join();
}

// Iterated logarithm, base 2: number of log applications until the value
// drops to 1 or below. iter_log2(1) = 0, iter_log2(2) = 1, iter_log2(16) = 3.
inline int iter_log2(double x) {
    int c = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++c;
    }
    return c;
}

} // namespace hopforge
