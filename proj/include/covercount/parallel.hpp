#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace covercount {

/// Evaluates fn(0), ..., fn(count-1) on up to `threads` workers and returns
/// the results in index order, so reductions over the output are
/// deterministic regardless of scheduling. Exceptions from workers are
/// rethrown after all workers join.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn fn) {
    std::vector<std::optional<R>> slots(count);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads == 0 ? 1 : threads, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (;;) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= count || failed.load()) return;
                        slots[i].emplace(fn(i));
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                    failed.store(true);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// Default worker count: COVERCOUNT_THREADS handling lives in the CLI; the
/// library takes explicit counts and treats 0 as "hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace covercount
