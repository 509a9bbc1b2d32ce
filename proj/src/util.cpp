#include "types.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace a4ssl {

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SSL_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

void parallel_chunks(unsigned long long total,
                     const std::function<void(unsigned long long, unsigned long long)>& fn) {
    unsigned n = worker_count();
    if (total == 0) return;
    if (n <= 1 || total < 1024) {
        fn(0, total);
        return;
    }
    unsigned long long chunk = (total + n - 1) / n;
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (unsigned long long begin = 0; begin < total; begin += chunk) {
        unsigned long long end = std::min(total, begin + chunk);
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace a4ssl
