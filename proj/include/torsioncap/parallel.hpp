#pragma once

#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace torsioncap {

// Order-stable parallel map: results land at their task index, so the output
// never depends on the worker count or the schedule.
template <class R>
std::vector<R> parallel_map(size_t n, unsigned workers, const std::function<R(size_t)>& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<R> out(n);
    if (n == 0) return out;
    if (workers == 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= n) break;
                    out[i] = fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

} // namespace torsioncap
