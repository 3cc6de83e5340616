// Copyright 2026 The Authors.
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

#ifndef DMW_PARALLEL_HPP_
#define DMW_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dmw {

// Worker count from DM_WORKERS, else the number of hardware threads.
unsigned default_workers();

// Splits [begin, end) into a fixed number of contiguous chunks that does not
// depend on `workers`, runs fn(lo, hi) on each, and returns the results in
// chunk order. Output is therefore identical for every worker count.
template <typename Fn>
auto parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned workers,
                     Fn&& fn) -> std::vector<decltype(fn(begin, end))> {
  using Result = decltype(fn(begin, end));
  constexpr std::uint64_t kChunks = 256;
  const std::uint64_t span = end > begin ? end - begin : 0;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(kChunks, span));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::uint64_t c) {
    return begin + span * c / chunks;
  };

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        results[c] = fn(bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace dmw

#endif  // DMW_PARALLEL_HPP_
