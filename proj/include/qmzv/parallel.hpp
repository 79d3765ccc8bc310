#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qmzv {

/// Worker count actually used: the QMZV_THREADS environment variable wins
/// over the requested value; anything unparsable or below 1 becomes 1.
inline unsigned resolve_parallelism(unsigned requested) {
    if (const char* env = std::getenv("QMZV_THREADS")) {
        try {
            const long v = std::stol(env);
            return v < 1 ? 1u : static_cast<unsigned>(v);
        } catch (const std::exception&) {
            return 1;
        }
    }
    return requested < 1 ? 1u : requested;
}

/// Runs fn(0..count-1) across the given number of workers and collects the
/// results in index order, so the output is identical for every worker
/// count.  The first exception thrown by a task is rethrown after all
/// workers stop.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
    std::vector<R> results(count);
    if (count == 0) {
        return results;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads < 1 ? 1 : threads, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = fn(i);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(body);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

} // namespace qmzv
