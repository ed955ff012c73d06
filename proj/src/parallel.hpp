#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fdp::detail {

// Runs fn(begin, end) over a static partition of [0, total). Results must be
// combined order-independently by the caller (per-chunk accumulators). The
// first exception thrown by a worker is rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
    if (threads <= 1 || total < 2) {
        fn(std::uint64_t(0), total);
        return;
    }
    const auto workers = static_cast<std::uint64_t>(threads);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([=, &fn, &first_error, &error_mutex] {
            try {
                fn(begin, end);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fdp::detail
