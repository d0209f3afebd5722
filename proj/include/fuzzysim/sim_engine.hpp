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
#include "fuzzysim/support_tracker.hpp"
#include "fuzzysim/worklist.hpp"

namespace fuzzysim {

// Z[x,x'] := L(x) ≤ L'(x') for all pairs.
inline Relation label_compatible_pairs(const FuzzyGraph& g, const FuzzyGraph& h) {
  Relation z(g.vertex_count(), h.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    for (VertexId x2 = 0; x2 < h.vertex_count(); ++x2)
      if (label_leq(g.label(x), h.label(x2))) z.insert(x, x2);
  return z;
}

// Largest simulation between G and G' in O((m+n)n) time.
//
// Typical use is compute_largest_simulation(); the step-wise interface
// (initialize / step / verify_invariants) exists for instrumented runs.
// The graphs must outlive the engine and share one Alphabet.
class SimulationEngine {
 public:
  SimulationEngine(const FuzzyGraph& g, const FuzzyGraph& h, EngineTrace trace = {})
      : g_(g),
        h_(h),
        trace_(std::move(trace)),
        g_index_(g, shared_edge_label_count(g, h)),
        h_index_(h, shared_edge_label_count(g, h)),
        tracker_(g, g_index_, h, h_index_, worklist_) {}

  SimulationEngine(const SimulationEngine&) = delete;
  SimulationEngine& operator=(const SimulationEngine&) = delete;

  void initialize() {
    worklist_ = PairWorklist(label_compatible_pairs(g_, h_), &trace_);
    if (trace_.after_label_filter) trace_.after_label_filter(worklist_.z());
    tracker_.build();
    tracker_.update_all();
    initialized_ = true;
    if (trace_.after_initialize)
      trace_.after_initialize(worklist_.z(), worklist_.pending());
  }

  // Extracts and processes one queued pair; false once the queue is empty.
  bool step() {
    if (worklist_.empty()) return false;
    auto [y, y2] = worklist_.extract();
    if (auto next = worklist_.peek())
      tracker_.prefetch(next->first, next->second);
    tracker_.on_extracted(y, y2);
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
  SupportTracker<false>& tracker() { return tracker_; }
  const SupportTracker<false>& tracker() const { return tracker_; }

  // Loop invariants: the structures match their specifications, `largest`
  // (the true largest simulation) is contained in Z, and every Z pair with
  // an r-edge into y is still listed in rcPrev[r,y,x'].
  std::optional<std::string> verify_invariants(const Relation& largest) const {
    if (!largest.is_subset_of(worklist_.z()))
      return "largest simulation is not contained in Z";
    return tracker_.verify();
  }

 private:
  const FuzzyGraph& g_;
  const FuzzyGraph& h_;
  EngineTrace trace_;
  NeighborIndex g_index_;
  NeighborIndex h_index_;
  PairWorklist worklist_;
  SupportTracker<false> tracker_;
  bool initialized_ = false;
};

inline Relation compute_largest_simulation(const FuzzyGraph& g, const FuzzyGraph& h) {
  SimulationEngine engine(g, h);
  return engine.run();
}

}  // namespace fuzzysim
