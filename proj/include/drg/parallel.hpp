#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace drg {

// Number of workers to use when the caller passes 0 ("auto").
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, n).  Work is handed out in fixed-size chunks via an
// atomic counter; each call writes only to state indexed by its own i, so the
// combined result is identical for any worker count.  With threads <= 1 the
// loop runs inline.
template <typename F>
void parallel_for(int n, int threads, F&& f) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    const int chunk = 16;
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int begin = next.fetch_add(chunk);
            if (begin >= n) return;
            int end = begin + chunk < n ? begin + chunk : n;
            for (int i = begin; i < end; ++i) f(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Smallest index i in [0, n) with pred(i) true, or n if none.  Indices above
// a discovered hit are skipped opportunistically; the returned index is the
// minimum over all hits, so the answer does not depend on scheduling.
template <typename P>
int parallel_find_first(int n, int threads, P&& pred) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i)
            if (pred(i)) return i;
        return n;
    }
    std::atomic<int> best{n};
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            if (i >= best.load(std::memory_order_relaxed)) continue;
            if (pred(i)) {
                int cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return best.load();
}

}  // namespace drg
