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

// Definition-level reference implementations. Everything here works from
// FuzzyGraph lookups alone (no NeighborIndex, no sorting) and stays
// deliberately unoptimized: it is the ground truth the engines are checked
// against.

#include <deque>
#include <functional>
#include <optional>
#include <string>

#include "fuzzysim/graph.hpp"
#include "fuzzysim/relation.hpp"

namespace fuzzysim {

enum class ViolationKind { kLabel, kForward, kBackward };

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kLabel: return "label";
    case ViolationKind::kForward: return "forward";
    case ViolationKind::kBackward: return "backward";
  }
  return "?";
}

// A failed instance of a simulation condition.
//  kLabel:    Z(x,x') but L(x) ≰ L'(x')                  witness <x,x'>
//  kForward:  Z(x,x'), E(x,r,y) > 0, no matching y'       witness <x,x',y>
//  kBackward: Z(x,x'), E'(x',r,y') > 0, no matching y     witness <x,x',y'>
struct Violation {
  ViolationKind kind;
  VertexId x;
  VertexId x_prime;
  VertexId third = 0;
  SymbolId label = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string describe(const Violation& v, const FuzzyGraph& g,
                            const FuzzyGraph& h) {
  std::string out = std::string(to_string(v.kind)) + " violation at (" +
                    g.vertex_name(v.x) + ", " + h.vertex_name(v.x_prime);
  if (v.kind == ViolationKind::kForward) out += ", " + g.vertex_name(v.third);
  if (v.kind == ViolationKind::kBackward) out += ", " + h.vertex_name(v.third);
  return out + ")";
}

namespace oracle_detail {

// Is there y' with Z(y,y') and degree <= E'(x',r,y')?
inline bool forward_matched(const FuzzyGraph& h, const Relation& z, VertexId x2,
                            SymbolId r, VertexId y, Degree degree) {
  for (VertexId y2 = 0; y2 < h.vertex_count(); ++y2) {
    Degree d2 = h.edge_degree(x2, r, y2);
    if (!d2.is_zero() && z.contains(y, y2) && degree <= d2) return true;
  }
  return false;
}

// Is there y with Z(y,y') and degree <= E(x,r,y)?
inline bool backward_matched(const FuzzyGraph& g, const Relation& z, VertexId x,
                             SymbolId r, VertexId y2, Degree degree) {
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    Degree d = g.edge_degree(x, r, y);
    if (!d.is_zero() && z.contains(y, y2) && degree <= d) return true;
  }
  return false;
}

inline std::optional<Violation> forward_violation(const FuzzyGraph& g,
                                                  const FuzzyGraph& h,
                                                  const Relation& z, VertexId x,
                                                  VertexId x2) {
  for (const Edge& e : g.edges())
    if (e.from == x && !forward_matched(h, z, x2, e.label, e.to, e.degree))
      return Violation{ViolationKind::kForward, x, x2, e.to, e.label};
  return std::nullopt;
}

inline std::optional<Violation> backward_violation(const FuzzyGraph& g,
                                                   const FuzzyGraph& h,
                                                   const Relation& z, VertexId x,
                                                   VertexId x2) {
  for (const Edge& e : h.edges())
    if (e.from == x2 && !backward_matched(g, z, x, e.label, e.to, e.degree))
      return Violation{ViolationKind::kBackward, x, x2, e.to, e.label};
  return std::nullopt;
}

inline std::optional<Violation> check(const Relation& z, const FuzzyGraph& g,
                                      const FuzzyGraph& h, bool directed) {
  for (auto [x, x2] : z.pairs()) {
    if (!label_leq(g.label(x), h.label(x2)))
      return Violation{ViolationKind::kLabel, x, x2};
    if (directed)
      if (auto v = backward_violation(g, h, z, x, x2)) return v;
    if (auto v = forward_violation(g, h, z, x, x2)) return v;
  }
  return std::nullopt;
}

inline Relation label_filter(const FuzzyGraph& g, const FuzzyGraph& h) {
  Relation z(g.vertex_count(), h.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    for (VertexId x2 = 0; x2 < h.vertex_count(); ++x2)
      if (label_leq(g.label(x), h.label(x2))) z.insert(x, x2);
  return z;
}

inline Relation naive_fixpoint(const FuzzyGraph& g, const FuzzyGraph& h,
                               bool directed) {
  Relation z = label_filter(g, h);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      for (VertexId x2 = 0; x2 < h.vertex_count(); ++x2) {
        if (!z.contains(x, x2)) continue;
        if (forward_violation(g, h, z, x, x2) ||
            (directed && backward_violation(g, h, z, x, x2))) {
          z.erase(x, x2);
          changed = true;
        }
      }
  }
  return z;
}

}  // namespace oracle_detail

// Conditions (1) and (2). nullopt means Z is a simulation.
inline std::optional<Violation> check_simulation(const Relation& z,
                                                 const FuzzyGraph& g,
                                                 const FuzzyGraph& h) {
  return oracle_detail::check(z, g, h, false);
}

// Conditions (1), (2) and (3). Per pair the backward condition is examined
// before the forward one.
inline std::optional<Violation> check_directed_simulation(const Relation& z,
                                                          const FuzzyGraph& g,
                                                          const FuzzyGraph& h) {
  return oracle_detail::check(z, g, h, true);
}

// Label-compatible pairs, then whole passes deleting pairs that violate the
// forward condition against the current relation, until a pass changes
// nothing.
inline Relation naive_largest_simulation(const FuzzyGraph& g, const FuzzyGraph& h) {
  return oracle_detail::naive_fixpoint(g, h, false);
}

inline Relation naive_largest_directed_simulation(const FuzzyGraph& g,
                                                  const FuzzyGraph& h) {
  return oracle_detail::naive_fixpoint(g, h, true);
}

enum class QueueDiscipline { kFifo, kLifo };

struct WorklistOptions {
  QueueDiscipline discipline = QueueDiscipline::kFifo;
  // Called once, right before the main loop, with Z and removeZ.
  std::function<void(const Relation& z, const Relation& pending)> before_main_loop;
  // Called after each extraction (the pair is no longer pending).
  std::function<void(VertexPair extracted, const Relation& z,
                     const Relation& pending)>
      on_extract;
};

struct WorklistRun {
  Relation relation;
  std::size_t insertions = 0;
  std::size_t extractions = 0;
};

// The abstract worklist algorithm with set-valued Z and removeZ, calling
// ProcessPrev (and, when `directed`, its dual ProcessPrev') literally.
class WorklistOracle {
 public:
  WorklistOracle(const FuzzyGraph& g, const FuzzyGraph& h, bool directed,
                 WorklistOptions options = {})
      : g_(g),
        h_(h),
        directed_(directed),
        labels_(shared_edge_label_count(g, h)),
        options_(std::move(options)),
        z_(oracle_detail::label_filter(g, h)),
        pending_(g.vertex_count(), h.vertex_count()) {}

  WorklistRun run() {
    for (SymbolId r = 0; r < labels_; ++r)
      for (VertexId y = 0; y < g_.vertex_count(); ++y)
        for (VertexId x2 = 0; x2 < h_.vertex_count(); ++x2) process_prev(r, y, x2);
    if (directed_)
      for (SymbolId r = 0; r < labels_; ++r)
        for (VertexId x = 0; x < g_.vertex_count(); ++x)
          for (VertexId y2 = 0; y2 < h_.vertex_count(); ++y2)
            process_prev_dual(r, x, y2);
    if (options_.before_main_loop) options_.before_main_loop(z_, pending_);

    while (!queue_.empty()) {
      VertexPair p;
      if (options_.discipline == QueueDiscipline::kFifo) {
        p = queue_.front();
        queue_.pop_front();
      } else {
        p = queue_.back();
        queue_.pop_back();
      }
      pending_.erase(p.first, p.second);
      ++extractions_;
      if (options_.on_extract) options_.on_extract(p, z_, pending_);
      auto [y, y2] = p;
      for (SymbolId r = 0; r < labels_; ++r)
        for (VertexId x2 = 0; x2 < h_.vertex_count(); ++x2)
          if (!h_.edge_degree(x2, r, y2).is_zero()) process_prev(r, y, x2);
      if (directed_)
        for (SymbolId r = 0; r < labels_; ++r)
          for (VertexId x = 0; x < g_.vertex_count(); ++x)
            if (!g_.edge_degree(x, r, y).is_zero()) process_prev_dual(r, x, y2);
    }
    return {z_, insertions_, extractions_};
  }

 private:
  void move_to_pending(VertexId x, VertexId x2) {
    z_.erase(x, x2);
    pending_.insert(x, x2);
    queue_.emplace_back(x, x2);
    ++insertions_;
  }

  // ProcessPrev(r,y,x').
  void process_prev(SymbolId r, VertexId y, VertexId x2) {
    Degree d = Degree::zero();
    for (VertexId y2 = 0; y2 < h_.vertex_count(); ++y2) {
      Degree e = h_.edge_degree(x2, r, y2);
      if (!e.is_zero() && (z_.contains(y, y2) || pending_.contains(y, y2)))
        d = std::max(d, e);
    }
    for (VertexId x = 0; x < g_.vertex_count(); ++x) {
      Degree e = g_.edge_degree(x, r, y);
      if (!e.is_zero() && e > d && z_.contains(x, x2)) move_to_pending(x, x2);
    }
  }

  // ProcessPrev'(r,x,y').
  void process_prev_dual(SymbolId r, VertexId x, VertexId y2) {
    Degree d = Degree::zero();
    for (VertexId y = 0; y < g_.vertex_count(); ++y) {
      Degree e = g_.edge_degree(x, r, y);
      if (!e.is_zero() && (z_.contains(y, y2) || pending_.contains(y, y2)))
        d = std::max(d, e);
    }
    for (VertexId x2 = 0; x2 < h_.vertex_count(); ++x2) {
      Degree e = h_.edge_degree(x2, r, y2);
      if (!e.is_zero() && e > d && z_.contains(x, x2)) move_to_pending(x, x2);
    }
  }

  const FuzzyGraph& g_;
  const FuzzyGraph& h_;
  bool directed_;
  std::size_t labels_;
  WorklistOptions options_;
  Relation z_;
  Relation pending_;
  std::deque<VertexPair> queue_;
  std::size_t insertions_ = 0;
  std::size_t extractions_ = 0;
};

inline Relation worklist_largest_simulation(const FuzzyGraph& g,
                                            const FuzzyGraph& h,
                                            WorklistOptions options = {}) {
  return WorklistOracle(g, h, false, std::move(options)).run().relation;
}

inline Relation worklist_largest_directed_simulation(const FuzzyGraph& g,
                                                     const FuzzyGraph& h,
                                                     WorklistOptions options = {}) {
  return WorklistOracle(g, h, true, std::move(options)).run().relation;
}

// Loop invariant of the worklist algorithms: for every <r,y,x'> and every
// x ∈ Prev_r(y) with Z(x,x'), E(x,r,y) is bounded by the best r-edge from x'
// into {y' | <y,y'> ∈ Z ∪ pending}. With `directed`, also the dual bound.
inline bool worklist_support_invariant_holds(const FuzzyGraph& g,
                                             const FuzzyGraph& h,
                                             const Relation& z,
                                             const Relation& pending,
                                             bool directed) {
  Relation alive = z;
  for (auto [y, y2] : pending.pairs()) alive.insert(y, y2);
  for (auto [x, x2] : z.pairs()) {
    for (const Edge& e : g.edges())
      if (e.from == x &&
          !oracle_detail::forward_matched(h, alive, x2, e.label, e.to, e.degree))
        return false;
    if (directed)
      for (const Edge& e : h.edges())
        if (e.from == x2 &&
            !oracle_detail::backward_matched(g, alive, x, e.label, e.to, e.degree))
          return false;
  }
  return true;
}

}  // namespace fuzzysim
