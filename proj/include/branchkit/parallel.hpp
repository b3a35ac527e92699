#pragma once

#include <algorithm>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace branchkit {

// Runs f over items on `jobs` threads. Results are returned in input order, and
// `sink` (if set) is called in input order as soon as each prefix is complete.
template <class T, class R>
std::vector<R> parallel_map(const std::vector<T>& items, int jobs, const std::function<R(const T&)>& f,
                            const std::function<void(const R&)>& sink = {}) {
    const std::size_t n = items.size();
    std::vector<std::optional<R>> slots(n);
    std::mutex mu;
    std::size_t next = 0, emitted = 0;
    std::exception_ptr error;

    auto flush = [&] {
        while (emitted < n && slots[emitted]) {
            if (sink) sink(*slots[emitted]);
            ++emitted;
        }
    };
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(mu);
                if (next >= n || error) return;
                i = next++;
            }
            try {
                R r = f(items[i]);
                std::lock_guard lock(mu);
                slots[i] = std::move(r);
                flush();
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    const int t = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < t; ++k) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace branchkit
