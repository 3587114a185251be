#include "mgritcl/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace mgritcl {

void parallel_for(int count, int parallelism, const std::function<void(int)>& body) {
    if (count <= 0) {
        return;
    }
    const int workers = std::clamp(parallelism, 1, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    auto run_block = [&](int w) {
        const int begin = static_cast<int>(static_cast<long long>(count) * w / workers);
        const int end = static_cast<int>(static_cast<long long>(count) * (w + 1) / workers);
        try {
            for (int i = begin; i < end; ++i) {
                body(i);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) {
        threads.emplace_back(run_block, w);
    }
    run_block(0);
    for (auto& t : threads) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace mgritcl
