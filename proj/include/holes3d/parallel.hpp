#ifndef HOLES3D_PARALLEL_HPP
#define HOLES3D_PARALLEL_HPP

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace holes3d {

/**
 * Runs f(i) for i in [0, n) on up to `threads` workers using a static block
 * partition. Callers own determinism by writing results to index i only.
 * The first exception thrown by any worker is rethrown after all join.
 */
inline void parallel_for(long long n, int threads, const std::function<void(long long)>& f) {
    if (n <= 0) {
        return;
    }
    if (threads < 2 || n == 1) {
        for (long long i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    const long long workers = std::min<long long>(threads, n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (long long w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const long long lo = n * w / workers;
            const long long hi = n * (w + 1) / workers;
            try {
                for (long long i = lo; i < hi; ++i) {
                    f(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace holes3d

#endif
