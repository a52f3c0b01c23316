#include "trigon/parallel.hpp"

#include <cstdlib>
#include <string>

namespace trigon {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TRIGON_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // fall through to hardware concurrency
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

WorkerPool::WorkerPool(unsigned threads) {
    const unsigned extra = threads > 1 ? threads - 1 : 0;
    workers_.reserve(extra);
    for (unsigned k = 0; k < extra; ++k) workers_.emplace_back([this] { worker_loop(); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mutex_);
        stop_ = true;
    }
    wake_.notify_all();
    for (auto& w : workers_) w.join();
}

void WorkerPool::drain(std::unique_lock<std::mutex>& lock) {
    while (next_ < count_) {
        const std::size_t index = next_++;
        const auto* task = task_;
        ++active_;
        lock.unlock();
        (*task)(index);
        lock.lock();
        --active_;
    }
    if (active_ == 0) done_.notify_all();
}

void WorkerPool::worker_loop() {
    std::size_t seen = 0;
    std::unique_lock lock(mutex_);
    for (;;) {
        wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        drain(lock);
    }
}

void WorkerPool::run(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (workers_.empty()) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::unique_lock lock(mutex_);
    task_ = &fn;
    next_ = 0;
    count_ = n;
    ++generation_;
    wake_.notify_all();
    drain(lock);
    done_.wait(lock, [&] { return next_ >= count_ && active_ == 0; });
    task_ = nullptr;
}

}  // namespace trigon
