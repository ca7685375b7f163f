#ifndef THETASUM_PARALLEL_HPP
#define THETASUM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace thetasum::detail {

// Calls task(i) for i in [0, count) on at most `jobs` threads. The first
// exception thrown by any task is rethrown on the caller's thread.
template <typename Task>
void parallel_for(std::size_t count, unsigned jobs, Task&& task)
{
    std::size_t workers = std::min<std::size_t>(std::max(jobs, 1u), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace thetasum::detail

#endif
