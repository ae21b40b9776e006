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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace clawfree {

/// Worker count and wall-clock budget shared by a campaign's enumerators.
class RunControl {
 public:
  using Clock = std::chrono::steady_clock;

  RunControl() = default;
  explicit RunControl(int shards, std::optional<double> budget_seconds = std::nullopt)
      : shards_(shards) {
    if (budget_seconds) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*budget_seconds));
    }
  }
  RunControl(RunControl const& o) : shards_(o.shards_), deadline_(o.deadline_) {}

  int shards() const {
    if (shards_ > 0) return shards_;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }

  // True once the budget is spent; sticky.
  bool expired() const {
    if (expired_.load(std::memory_order_relaxed)) return true;
    if (deadline_ && Clock::now() >= *deadline_) {
      expired_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

 private:
  int shards_ = 1;
  std::optional<Clock::time_point> deadline_;
  mutable std::atomic<bool> expired_{false};
};

/// Runs body(shard, item) for item in [0, count), item i going to shard
/// i % shards. Per-shard state is the caller's business; merge afterwards.
template <typename Body>
void parallel_shards(std::size_t count, int shards, Body&& body) {
  shards = std::max(1, std::min<int>(shards, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (shards == 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> workers;
  for (int s = 0; s < shards; ++s) {
    workers.emplace_back([&, s] {
      try {
        for (std::size_t i = s; i < count; i += shards) body(s, i);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace clawfree
