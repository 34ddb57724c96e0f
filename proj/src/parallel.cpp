#include "cowpath/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace cowpath {

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        fn(0, n);
        return;
    }
    const std::size_t parts = std::min<std::size_t>(workers, n);
    const std::size_t chunk = (n + parts - 1) / parts;
    std::vector<std::thread> pool;
    pool.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        std::size_t begin = p * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace cowpath
