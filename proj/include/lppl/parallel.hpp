#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lppl {

// Runs body(i) for i in [0, n). Tasks are claimed from an atomic counter, so
// scheduling order is nondeterministic but each index runs exactly once;
// callers get determinism by writing results into index-addressed slots.
// workers <= 1 (or n < 2) degrades to a plain serial loop.
inline void parallel_for(int n, int workers, const std::function<void(int)>& body) {
    if (n <= 0) return;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    if (workers > n) workers = n;

    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto run = [&] {
        for (;;) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lppl
