// Copyright 2026 The fuzzysim Authors
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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fuzzysim/relation.hpp"

namespace fuzzysim {

// Work counters of one engine run.
struct EngineStats {
  std::size_t enqueued = 0;           // pairs moved from Z to the queue
  std::size_t extractions = 0;
  std::size_t peak_queue = 0;
  std::size_t rc_prev_pops = 0;
  std::size_t rc_next_deletions = 0;
  std::size_t rc_prev_initial = 0;    // entries of all rcPrev vectors after build
  std::size_t rc_next_initial = 0;    // elements of all rcNext lists after build
};

// Optional observation hooks; unset hooks cost one branch.
struct EngineTrace {
  std::function<void(const Relation& z)> after_label_filter;
  std::function<void(const Relation& z, std::span<const VertexPair> pending)>
      after_initialize;
  std::function<void(VertexPair removed)> on_remove;
  std::function<void(VertexPair extracted)> on_extract;
};

// The candidate relation Z together with removeZ as a FIFO queue. A pair
// enters the queue exactly when it leaves Z, so it is enqueued at most once;
// the queue is therefore a single array read from a moving head.
class PairWorklist {
 public:
  PairWorklist() = default;
  explicit PairWorklist(Relation z, const EngineTrace* trace = nullptr)
      : z_(std::move(z)), trace_(trace) {}

  const Relation& z() const { return z_; }

  void remove(VertexId x, VertexId x2) {
    z_.erase(x, x2);
    queue_.emplace_back(x, x2);
    ++stats_.enqueued;
    stats_.peak_queue = std::max(stats_.peak_queue, queue_.size() - head_);
    if (trace_ && trace_->on_remove) trace_->on_remove({x, x2});
  }

  bool empty() const { return head_ == queue_.size(); }

  VertexPair extract() {
    ++stats_.extractions;
    VertexPair p = queue_[head_++];
    if (trace_ && trace_->on_extract) trace_->on_extract(p);
    return p;
  }

  // The pair the next extract() returns, if any.
  std::optional<VertexPair> peek() const {
    if (empty()) return std::nullopt;
    return queue_[head_];
  }

  // Pairs removed from Z and not yet extracted, in queue order.
  std::span<const VertexPair> pending() const {
    return std::span<const VertexPair>(queue_).subspan(head_);
  }

  // Every pair ever enqueued, in order.
  std::span<const VertexPair> history() const { return queue_; }

  Relation pending_relation() const {
    Relation p(z_.left_size(), z_.right_size());
    for (auto [x, x2] : pending()) p.insert(x, x2);
    return p;
  }

  EngineStats& stats() { return stats_; }
  const EngineStats& stats() const { return stats_; }

 private:
  Relation z_;
  std::vector<VertexPair> queue_;
  std::size_t head_ = 0;
  EngineStats stats_;
  const EngineTrace* trace_ = nullptr;
};

}  // namespace fuzzysim
