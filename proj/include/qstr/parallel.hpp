#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qstr {

/// Worker-thread cap: QSTR_THREADS environment variable, 0 or unset = auto
/// (hardware concurrency).
inline unsigned thread_budget() {
    if (const char* env = std::getenv("QSTR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc != 0 ? hc : 1;
}

/// Run fn(i) for i in [0, count) on up to thread_budget() threads. The
/// callable must write its result into a slot indexed by i; combining slots
/// afterwards in index order keeps reductions deterministic regardless of
/// the degree of parallelism.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
    unsigned threads = thread_budget();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::jthread> pool;
    unsigned spawn = std::min<std::size_t>(threads, count);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
}

} // namespace qstr
