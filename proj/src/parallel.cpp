#include "shufalg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace shufalg {

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SHUFFLE_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1)
                hw = std::min(hw, unsigned(cap));
        } catch (const std::exception&) {
        }
    }
    return hw;
}

namespace {
thread_local bool in_pool = false;
}

void parallel_for(size_t n, const std::function<void(size_t)>& body, unsigned max_threads) {
    unsigned t = in_pool ? 1 : thread_budget();
    if (max_threads)
        t = std::min(t, max_threads);
    t = unsigned(std::min<size_t>(t, n));
    if (t <= 1) {
        for (size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        in_pool = true;
        for (size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err)
                    err = std::current_exception();
            }
        }
        in_pool = false;
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < t; ++k)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

}  // namespace shufalg
