#include "core/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace autoseq {

size_t resolve_threads(int requested) {
    if (requested > 0) return (size_t)requested;
    if (const char* env = std::getenv("AUTOSEQ_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return (size_t)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_blocks(size_t count, int threads, const std::function<void(size_t, size_t)>& fn) {
    size_t workers = resolve_threads(threads);
    if (workers > count) workers = count ? count : 1;
    if (workers <= 1 || count <= 1) {
        if (count) fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::atomic_flag error_set = ATOMIC_FLAG_INIT;
    size_t chunk = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t begin = w * chunk;
        size_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                if (!error_set.test_and_set()) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    parallel_blocks(count, threads, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) fn(i);
    });
}

} // namespace autoseq
