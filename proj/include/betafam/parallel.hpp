#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace betafam {

// Runs fn(k) for k in [0, n) on up to `jobs` threads pulling indices from a
// shared counter. fn must be safe to call concurrently for distinct k.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned jobs = 0)
{
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    if (jobs <= 1) {
        for (std::size_t k = 0; k < n; ++k)
            fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= n || failed.load())
                return;
            try {
                fn(k);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failed.load())
        std::rethrow_exception(error);
}

} // namespace betafam
