// Copyright 2026 The Myerson Attribution Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MYERSON_PARALLEL_H_
#define MYERSON_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace myerson {

// Resolves a user-facing thread count: values < 1 mean "all cores".
inline int ResolveThreads(int requested) {
  if (requested >= 1) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(begin, end) over [0, count) in chunks on up to `threads`
// workers. Each index is visited exactly once. The first exception thrown by
// any chunk is rethrown on the calling thread after all workers stop.
template <typename Body>
void ParallelFor(std::size_t count, int threads, std::size_t chunk,
                 Body&& body) {
  if (count == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  threads = ResolveThreads(threads);
  const std::size_t chunks = (count + chunk - 1) / chunk;
  if (threads == 1 || chunks == 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      const std::size_t begin = c * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };
  const int spawned =
      static_cast<int>(std::min<std::size_t>(chunks, threads)) - 1;
  std::vector<std::jthread> pool;
  pool.reserve(spawned);
  for (int t = 0; t < spawned; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace myerson

#endif  // MYERSON_PARALLEL_H_
