#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dihom {

/// Values <= 0 select the hardware concurrency.
inline int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(begin, end, worker) on `workers` contiguous slices of [0, count).
/// Slice boundaries depend only on (count, workers). The first exception
/// thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_slices(std::size_t count, int workers, Fn&& fn)
{
    const auto w = static_cast<std::size_t>(std::max(1, workers));
    if (w == 1 || count < 2) {
        fn(std::size_t{0}, count, 0);
        return;
    }
    const std::size_t slices = std::min(w, count);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> threads;
    threads.reserve(slices);
    for (std::size_t s = 0; s < slices; ++s) {
        const std::size_t begin = count * s / slices;
        const std::size_t end = count * (s + 1) / slices;
        threads.emplace_back([&, begin, end, s] {
            try {
                fn(begin, end, static_cast<int>(s));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    threads.clear();
    if (failure)
        std::rethrow_exception(failure);
}

/// fn(i) for every i in [0, count).
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn)
{
    parallel_slices(count, workers, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end; ++i)
            fn(i);
    });
}

} // namespace dihom
