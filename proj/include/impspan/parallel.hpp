#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace impspan {

// Runs f(i) for i in [begin, end) on up to `threads` workers in contiguous
// chunks. threads <= 1 runs inline. f must be safe to call concurrently.
template <typename F>
void parallel_for(std::size_t begin, std::size_t end, int threads, F&& f) {
    if (end <= begin) return;
    const std::size_t count = end - begin;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = begin; i < end; ++i) f(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + count * w / workers;
        const std::size_t hi = begin + count * (w + 1) / workers;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace impspan
