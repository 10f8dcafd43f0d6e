#include "boltzkit/parallel.hpp"

#include <thread>
#include <vector>

namespace boltzkit {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
    const std::size_t t = static_cast<std::size_t>(resolve_threads(threads));
    if (t == 1 || count <= 1) {
        chunk_fn(0, count);
        return;
    }
    const std::size_t base = count / t;
    const std::size_t rem = count % t;
    std::vector<std::thread> pool;
    pool.reserve(t - 1);
    std::size_t begin = 0;
    for (std::size_t c = 0; c < t; ++c) {
        const std::size_t len = base + (c < rem ? 1 : 0);
        const std::size_t end = begin + len;
        if (c == 0) {
            // chunk 0 runs last, on the calling thread
        } else {
            pool.emplace_back(chunk_fn, begin, end);
        }
        begin = end;
    }
    const std::size_t first_len = base + (0 < rem ? 1 : 0);
    chunk_fn(0, first_len);
    for (auto& th : pool) th.join();
}

namespace {

double pairwise_block(const double* data, std::size_t count) {
    if (count <= 32) {
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) acc += data[i];
        return acc;
    }
    const std::size_t half = count / 2;
    return pairwise_block(data, half) + pairwise_block(data + half, count - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_block(values.data(), values.size());
}

}  // namespace boltzkit
