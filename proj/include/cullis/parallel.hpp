#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cullis {

// Runs fn(i) for i in [0, total) across `jobs` threads with static chunking.
// Callers write results into per-index slots, so the outcome is identical
// for every job count; exceptions are rethrown on the calling thread.
template <typename F>
void parallel_for(uint64_t total, int jobs, F&& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || total <= 1) {
        for (uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    uint64_t nworkers = std::min<uint64_t>(uint64_t(jobs), total);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex err_mu;
    for (uint64_t w = 0; w < nworkers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (uint64_t i = w; i < total; i += nworkers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace cullis
