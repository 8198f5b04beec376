#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace csk {

/// Worker cap: CSK_THREADS if set, hardware concurrency otherwise.
inline unsigned thread_cap()
{
    if (const char* env = std::getenv("CSK_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n) on up to thread_cap() workers. The work must
/// be independent per index; results must not depend on the schedule.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn)
{
    const unsigned workers = std::min<std::size_t>(thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace csk
