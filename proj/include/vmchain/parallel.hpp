#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace vmchain {

// Worker count: hardware concurrency, clamped by the VMCHAIN_THREADS
// environment variable when set.
inline int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("VMCHAIN_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

// Runs f(i) for i in [begin, end) across workers. Callers that need
// deterministic output index into preallocated result slots; the chunked
// schedule never reorders anything observable.
template <class F>
void parallel_for(std::uint64_t begin, std::uint64_t end, F&& f,
                  std::uint64_t chunk = 64) {
    if (begin >= end) return;
    const std::uint64_t total = end - begin;
    int workers = thread_budget();
    if (workers <= 1 || total <= chunk) {
        for (std::uint64_t i = begin; i < end; ++i) f(i);
        return;
    }
    std::atomic<std::uint64_t> next{begin};
    auto body = [&] {
        for (;;) {
            std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= end) return;
            std::uint64_t hi = lo + chunk < end ? lo + chunk : end;
            for (std::uint64_t i = lo; i < hi; ++i) f(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

}  // namespace vmchain
