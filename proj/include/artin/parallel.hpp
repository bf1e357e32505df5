#pragma once

// Deterministic block-partitioned parallelism: work is split into fixed
// blocks, computed by any number of workers, and reduced in block order, so
// results do not depend on the thread count.

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

constexpr u64 kCountingBlock = u64(1) << 20;

inline unsigned clamp_threads(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (requested == 0) return hw;
    return requested;
}

// fn(block_lo, block_hi) -> R over [lo, hi]; returns per-block results in order
template <class R, class Fn>
std::vector<R> parallel_block_map(u64 lo, u64 hi, u64 block, unsigned threads, Fn&& fn) {
    std::vector<R> results;
    if (hi < lo) return results;
    u64 nblocks = (hi - lo) / block + 1;
    results.resize(size_t(nblocks));
    threads = clamp_threads(threads);
    if (threads == 1 || nblocks == 1) {
        for (u64 b = 0; b < nblocks; ++b) {
            u64 blo = lo + b * block;
            u64 bhi = std::min(hi, blo + block - 1);
            results[size_t(b)] = fn(blo, bhi);
        }
        return results;
    }
    std::atomic<u64> next{0};
    auto worker = [&] {
        for (;;) {
            u64 b = next.fetch_add(1);
            if (b >= nblocks) return;
            u64 blo = lo + b * block;
            u64 bhi = std::min(hi, blo + block - 1);
            results[size_t(b)] = fn(blo, bhi);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace artin
