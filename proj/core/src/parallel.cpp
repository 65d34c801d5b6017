// Copyright 2026 The stforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace stforge {

namespace {

size_t env_thread_count() {
  if (const char* env = std::getenv("STFORGE_THREADS")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  size_t hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

struct Job {
  std::function<void(size_t)> fn;
  size_t total = 0;
  std::atomic<size_t> next{0};
  std::atomic<size_t> pending{0};
  std::mutex mu;
  std::condition_variable done;

  // Workers race on `next`; each index is executed exactly once.
  void drain() {
    while (true) {
      size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= total) break;
      fn(i);
      if (pending.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        std::lock_guard<std::mutex> lock(mu);
        done.notify_all();
      }
    }
  }

  void wait() {
    std::unique_lock<std::mutex> lock(mu);
    done.wait(lock, [this] { return pending.load() == 0; });
  }
};

// Minimal persistent pool; one job in flight at a time, the submitting
// thread participates in the work.
class Pool {
 public:
  Pool() : nthreads_(env_thread_count()) {
    for (size_t t = 0; t + 1 < nthreads_; ++t) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  ~Pool() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  size_t size() const { return nthreads_; }

  void run(size_t n, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    if (nthreads_ == 1 || n == 1) {
      for (size_t i = 0; i < n; ++i) fn(i);
      return;
    }
    auto job = std::make_shared<Job>();
    job->fn = fn;
    job->total = n;
    job->pending.store(n);
    {
      std::lock_guard<std::mutex> lock(mu_);
      job_ = job;
      generation_++;
    }
    cv_.notify_all();
    job->drain();
    job->wait();
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (job_ == job) job_.reset();
    }
  }

 private:
  void worker_loop() {
    uint64_t seen = 0;
    while (true) {
      std::shared_ptr<Job> job;
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return stop_ || (generation_ != seen && job_); });
        if (stop_) return;
        seen = generation_;
        job = job_;
      }
      if (job) job->drain();
    }
  }

  size_t nthreads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::shared_ptr<Job> job_;
  uint64_t generation_ = 0;
  bool stop_ = false;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

size_t num_threads() { return pool().size(); }

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  pool().run(n, fn);
}

void parallel_blocks(size_t n, const std::function<void(size_t, size_t)>& fn) {
  size_t nt = std::min(num_threads(), n);
  if (nt <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  size_t chunk = (n + nt - 1) / nt;
  parallel_for(nt, [&](size_t t) {
    size_t begin = t * chunk;
    size_t end = std::min(begin + chunk, n);
    if (begin < end) fn(begin, end);
  });
}

}  // namespace stforge
