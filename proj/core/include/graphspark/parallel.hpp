#pragma once

#include <thread>
#include <vector>

namespace graphspark {

/// Worker count: GRAPHSPARK_THREADS when set (clamped to >= 1), otherwise
/// hardware concurrency.
int default_thread_count();

/// Runs fn(index, worker) for index in [0, count) across `threads` workers
/// (strided assignment). fn must be safe to call concurrently for distinct
/// indices; per-worker accumulation plus an index-sorted merge keeps results
/// deterministic regardless of the worker count.
template <typename Fn>
void parallel_for(long count, int threads, Fn fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || count < 2) {
        for (long i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    if (threads > count) threads = static_cast<int>(count);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([=] {
            for (long i = t; i < count; i += threads) fn(i, t);
        });
    for (auto& th : pool) th.join();
}

} // namespace graphspark
