#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace seawedge {

// Worker count for trial loops: hardware concurrency, optionally capped by
// the SEAWEDGE_THREADS environment variable.
inline unsigned thread_limit() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SEAWEDGE_THREADS")) {
        try {
            const long requested = std::stol(env);
            if (requested >= 1 && static_cast<unsigned>(requested) < hw)
                hw = static_cast<unsigned>(requested);
        } catch (...) {
            // unreadable value: keep the hardware default
        }
    }
    return hw;
}

// Runs fn(i) for i in [0, count).  Work items must be independent; callers
// aggregate through per-index slots or order-independent reductions.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_limit(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace seawedge
