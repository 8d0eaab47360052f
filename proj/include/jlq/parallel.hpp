#ifndef JLQ_PARALLEL_HPP
#define JLQ_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jlq {

// Chunked parallel loop over [begin, end). Tasks must write disjoint state.
// With threads <= 1 this degenerates to a plain loop, so results never
// depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
    if (begin >= end) return;
    const std::size_t count = end - begin;
    if (threads <= 1 || count < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                // Strided assignment keeps chunk sizes balanced when cost
                // varies along the range.
                for (std::size_t i = begin + w; i < end; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace jlq

#endif
