#ifndef FANO_PARALLEL_HPP
#define FANO_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace fano {

/// 0 means "one per hardware thread".
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs task(i) for i in [0, tasks) on a bounded pool. Tasks must write only
/// to their own slot of any shared output. The exception of the lowest failing
/// task index is rethrown, so failures are reported identically at any thread count.
template <class Task>
void parallel_for(std::size_t tasks, unsigned threads, Task&& task) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), tasks));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
                    try {
                        task(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace fano

#endif // FANO_PARALLEL_HPP
