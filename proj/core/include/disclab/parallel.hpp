#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace disclab {

// DISCLAB_WORKERS overrides the hardware thread count.
inline int workerCount() {
    if (const char* env = std::getenv("DISCLAB_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(i) for i in [0, n) over contiguous chunks. Results must be written per index
// so the outcome does not depend on the worker count.
template <class F>
void parallelFor(size_t n, F&& f, int workers = workerCount()) {
    size_t w = std::min<size_t>(std::max(1, workers), n);
    if (w <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex m;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < w; ++t) {
        pool.emplace_back([&, t] {
            size_t lo = n * t / w, hi = n * (t + 1) / w;
            try {
                for (size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace disclab
