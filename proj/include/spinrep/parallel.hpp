#ifndef SPINREP_PARALLEL_HPP
#define SPINREP_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace spinrep {

/// Worker cap: SPINREP_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int workerCount();

/// Splits [0, count) into contiguous slices, evaluates `slice(first, last)`
/// on up to workerCount() threads and combines the partial results in slice
/// order, so the reduction is deterministic for associative `combine`.
template <class T>
T parallelReduce(std::uint64_t count, const std::function<T(std::uint64_t, std::uint64_t)>& slice,
                 const std::function<void(T&, const T&)>& combine, T init)
{
    const auto workers = static_cast<std::uint64_t>(workerCount());
    const std::uint64_t slices = std::min<std::uint64_t>(workers, count == 0 ? 1 : count);
    if (slices <= 1) {
        combine(init, slice(0, count));
        return init;
    }
    std::vector<T> partial(slices);
    std::vector<std::thread> threads;
    threads.reserve(slices);
    for (std::uint64_t s = 0; s < slices; ++s) {
        const std::uint64_t first = count * s / slices;
        const std::uint64_t last = count * (s + 1) / slices;
        threads.emplace_back([&, s, first, last] { partial[s] = slice(first, last); });
    }
    for (auto& t : threads)
        t.join();
    for (const auto& p : partial)
        combine(init, p);
    return init;
}

} // namespace spinrep

#endif // SPINREP_PARALLEL_HPP
