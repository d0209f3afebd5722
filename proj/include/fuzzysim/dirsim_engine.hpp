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

#include <optional>
#include <string>

#include "fuzzysim/graph.hpp"
#include "fuzzysim/neighbor_index.hpp"
#include "fuzzysim/relation.hpp"
#include "fuzzysim/sim_engine.hpp"
#include "fuzzysim/support_tracker.hpp"
#include "fuzzysim/worklist.hpp"

namespace fuzzysim {

enum class PassOrder { kForwardFirst, kBackwardFirst };

// Largest directed simulation between G and G' in O((m+n)n) time.
//
// Two trackers share one Z and queue: the forward one over (G, G') and the
// same implementation instantiated transposed over (G', G), which keeps the
// dual rcNext/rcNextElem/rcPrev' structures for the backward condition.
class DirectedSimulationEngine {
 public:
  DirectedSimulationEngine(const FuzzyGraph& g, const FuzzyGraph& h,
                           EngineTrace trace = {},
                           PassOrder order = PassOrder::kForwardFirst)
      : g_(g),
        h_(h),
        trace_(std::move(trace)),
        order_(order),
        g_index_(g, shared_edge_label_count(g, h)),
        h_index_(h, shared_edge_label_count(g, h)),
        forward_(g, g_index_, h, h_index_, worklist_),
        backward_(h, h_index_, g, g_index_, worklist_) {}

  DirectedSimulationEngine(const DirectedSimulationEngine&) = delete;
  DirectedSimulationEngine& operator=(const DirectedSimulationEngine&) = delete;

  // InitializeDS: both structure families are built before either update
  // sweep runs.
  void initialize() {
    worklist_ = PairWorklist(label_compatible_pairs(g_, h_), &trace_);
    if (trace_.after_label_filter) trace_.after_label_filter(worklist_.z());
    forward_.build();
    backward_.build();
    forward_.update_all();
    backward_.update_all();
    initialized_ = true;
    if (trace_.after_initialize)
      trace_.after_initialize(worklist_.z(), worklist_.pending());
  }

  bool step() {
    if (worklist_.empty()) return false;
    auto [y, y2] = worklist_.extract();
    if (auto next = worklist_.peek()) {
      forward_.prefetch(next->first, next->second);
      backward_.prefetch(next->second, next->first);
    }
    if (order_ == PassOrder::kForwardFirst) {
      forward_.on_extracted(y, y2);
      backward_.on_extracted(y2, y);
    } else {
      backward_.on_extracted(y2, y);
      forward_.on_extracted(y, y2);
    }
    return true;
  }

  const Relation& run() {
    if (!initialized_) initialize();
    while (step()) {
    }
    return worklist_.z();
  }

  const Relation& relation() const { return worklist_.z(); }
  const PairWorklist& worklist() const { return worklist_; }
  const EngineStats& stats() const { return worklist_.stats(); }
  SupportTracker<false>& forward_tracker() { return forward_; }
  SupportTracker<true>& backward_tracker() { return backward_; }

  std::optional<std::string> verify_invariants(const Relation& largest) const {
    if (!largest.is_subset_of(worklist_.z()))
      return "largest directed simulation is not contained in Z";
    if (auto err = forward_.verify()) return err;
    return backward_.verify();
  }

 private:
  const FuzzyGraph& g_;
  const FuzzyGraph& h_;
  EngineTrace trace_;
  PassOrder order_;
  NeighborIndex g_index_;
  NeighborIndex h_index_;
  PairWorklist worklist_;
  SupportTracker<false> forward_;
  SupportTracker<true> backward_;
  bool initialized_ = false;
};

inline Relation compute_largest_directed_simulation(const FuzzyGraph& g,
                                                    const FuzzyGraph& h) {
  DirectedSimulationEngine engine(g, h);
  return engine.run();
}

}  // namespace fuzzysim
