#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "schurcone/errors.hpp"

namespace schurcone {

/// Process-wide soft deadline. Long-running drivers poll check() between
/// work units; expiry raises TimeoutError.
class Deadline {
  public:
    static void set_seconds(long secs) {
        until().store(secs <= 0 ? 0 : now_ms() + secs * 1000, std::memory_order_relaxed);
    }
    static void clear() { until().store(0, std::memory_order_relaxed); }
    static void check() {
        std::int64_t t = until().load(std::memory_order_relaxed);
        if (t != 0 && now_ms() > t) throw TimeoutError("deadline exceeded");
    }

  private:
    static std::atomic<std::int64_t>& until() {
        static std::atomic<std::int64_t> v{0};
        return v;
    }
    static std::int64_t now_ms() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    }
};

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
/// is rethrown on the calling thread after all workers join.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (jobs <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            Deadline::check();
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            {
                std::scoped_lock lock(error_mutex);
                if (error) return;
            }
            try {
                Deadline::check();
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace schurcone
