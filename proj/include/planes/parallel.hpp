#pragma once

#include <atomic>
#include <optional>
#include <thread>
#include <vector>

namespace planes {

/// Runs f(0..n-1), each returning an optional, and yields the result with the
/// smallest task index that is engaged. The outcome is independent of the
/// thread count: threads prune against the current best index but the final
/// reduction always takes the canonical minimum.
template <typename F>
auto parallel_first(size_t n, int jobs, F&& f) -> decltype(f(size_t(0))) {
    using R = decltype(f(size_t(0)));
    if (jobs <= 1) {
        for (size_t i = 0; i < n; ++i) {
            R r = f(i);
            if (r) return r;
        }
        return R{};
    }
    std::atomic<size_t> best_idx{n};
    std::vector<std::pair<size_t, R>> results(jobs, {n, R{}});
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += size_t(jobs)) {
                if (i >= best_idx.load(std::memory_order_relaxed)) continue;
                R r = f(i);
                if (r) {
                    results[t] = {i, std::move(r)};
                    size_t cur = best_idx.load();
                    while (i < cur && !best_idx.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    size_t best = n;
    int who = -1;
    for (int t = 0; t < jobs; ++t)
        if (results[t].second && results[t].first < best) {
            best = results[t].first;
            who = t;
        }
    return who < 0 ? R{} : std::move(results[who].second);
}

} // namespace planes
