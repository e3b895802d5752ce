#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qpde {

// Worker count for embarrassingly parallel jobs: QPDE_THREADS if set and
// sane, hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* env = std::getenv("QPDE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n) on a small pool.  Work items must be
// independent; results should land in pre-sized slots so the outcome does
// not depend on scheduling.  The first exception thrown by any item is
// rethrown after the pool drains.
template <class Fn>
void parallel_for_index(size_t n, Fn&& fn) {
    if (n == 0) return;
    const size_t nt = std::min<size_t>(worker_count(), n);
    if (nt <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            if (failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mu);
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qpde
