#include "ternmin/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ternmin {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("TERNMIN_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t n, unsigned threads,
                  const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), std::max<std::uint64_t>(n, 1)));
    if (threads == 1) {
        body(0, n, 0);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = n * t / threads;
        const std::uint64_t end = n * (t + 1) / threads;
        workers.emplace_back([&, begin, end, t] {
            try {
                body(begin, end, t);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    workers.clear();
    if (error) std::rethrow_exception(error);
}

} // namespace ternmin
