#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace trigon {

/// Worker count: `requested` if non-zero, else TRIGON_THREADS, else the
/// available hardware parallelism. Always at least 1.
unsigned resolve_threads(unsigned requested = 0);

/// Fixed set of workers running index ranges. `run` blocks until every
/// index in [0, n) has been handed to `fn` exactly once. Which thread runs
/// which index is unspecified, so callers write results into per-index slots.
class WorkerPool {
public:
    explicit WorkerPool(unsigned threads);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    unsigned size() const noexcept { return static_cast<unsigned>(workers_.size()) + 1; }

    void run(std::size_t n, const std::function<void(std::size_t)>& fn);

private:
    void worker_loop();
    void drain(std::unique_lock<std::mutex>& lock);

    std::vector<std::thread> workers_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const std::function<void(std::size_t)>* task_ = nullptr;
    std::size_t next_ = 0;
    std::size_t count_ = 0;
    std::size_t active_ = 0;
    std::size_t generation_ = 0;
    bool stop_ = false;
};

}  // namespace trigon
