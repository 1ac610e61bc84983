#include "hyperbetti/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hyperbetti {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_index(std::size_t count, int jobs,
                        const std::function<void(std::size_t, int)>& fn) {
    jobs = resolve_jobs(jobs);
    if (count == 0) return;
    if (jobs == 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    const std::size_t chunk =
        std::max<std::size_t>(1, count / (static_cast<std::size_t>(jobs) * 8));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int worker) {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) return;
            std::size_t end = std::min(count, begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i, worker);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace hyperbetti
