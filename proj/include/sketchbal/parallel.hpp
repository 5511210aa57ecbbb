#ifndef SKETCHBAL_PARALLEL_HPP
#define SKETCHBAL_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sketchbal {

/// Runs fn(i) for i in [0, count). Work items must be independent and write
/// to disjoint state; results are then identical to the serial order, so
/// callers stay deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t hw = std::thread::hardware_concurrency();
    const std::size_t workers = hw == 0 ? 1 : hw;
    if (count <= 1 || workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t used = workers < count ? workers : count;
    std::vector<std::exception_ptr> errors(used);
    for (std::size_t w = 0; w < used; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += used) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace sketchbal

#endif
