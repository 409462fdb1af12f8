#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace resonance {

// Run fn(i) for i in [0, n). Blocks until done. fn must be safe to call
// concurrently for distinct i; results should be written to preallocated slots
// so the output order is deterministic.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned max_threads = 0) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (max_threads) hw = std::min(hw, max_threads);
    if (n == 0) return;
    unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, n));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace resonance
