#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace unirep {

/// Runs fn(0..count-1) on up to `jobs` threads. Results must be written by
/// the tasks into pre-sized slots so merge order never depends on timing.
/// The first exception thrown by any task is rethrown on the caller.
inline void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    const std::size_t workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(jobs < 1 ? 1 : jobs));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace unirep
