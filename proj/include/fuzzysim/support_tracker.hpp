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
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzysim/dense_list_table.hpp"
#include "fuzzysim/graph.hpp"
#include "fuzzysim/huge_page_allocator.hpp"
#include "fuzzysim/neighbor_index.hpp"
#include "fuzzysim/relation.hpp"
#include "fuzzysim/worklist.hpp"

namespace fuzzysim {

// An array of small unsigned integers stored in 8, 16 or 32 bits, the
// narrowest width that holds the declared maximum.
class IndexArray {
 public:
  void assign(std::size_t size, std::size_t max_value) {
    values8_.clear();
    values16_.clear();
    values32_.clear();
    if (max_value <= std::numeric_limits<std::uint8_t>::max())
      width_ = 8, values8_.resize(size);
    else if (max_value <= std::numeric_limits<std::uint16_t>::max())
      width_ = 16, values16_.resize(size);
    else
      width_ = 32, values32_.resize(size);
  }
  std::uint32_t operator[](std::size_t i) const {
    return width_ == 8 ? values8_[i] : width_ == 16 ? values16_[i] : values32_[i];
  }
  void set(std::size_t i, std::uint32_t value) {
    if (width_ == 8)
      values8_[i] = static_cast<std::uint8_t>(value);
    else if (width_ == 16)
      values16_[i] = static_cast<std::uint16_t>(value);
    else
      values32_[i] = value;
  }
  void prefetch(std::size_t i) const {
    if (width_ == 8)
      __builtin_prefetch(values8_.data() + i);
    else if (width_ == 16)
      __builtin_prefetch(values16_.data() + i);
    else
      __builtin_prefetch(values32_.data() + i);
  }

 private:
  int width_ = 8;
  HugePageVector<std::uint8_t> values8_;
  HugePageVector<std::uint16_t> values16_;
  HugePageVector<std::uint32_t> values32_;
};

// The "remaining for consideration" structures that keep the forward
// condition of a simulation between `source` and `target` checkable in O(1)
// per triple <r, y, x'> (y a source vertex, x' a target vertex):
//
//   rcNext[r,y,x']   doubly linked list of y' ∈ Next_r(x') (target) with
//                    <y,y'> in Z or pending, ascending by E'(x',r,y').
//                    Its nodes sit in a dense |source| × |E'| table, so the
//                    element for edge e' = <x',r,y'> is found at (y, e').
//   rcPrev[r,y,x']   x ∈ Prev_r(y) (source) still to be checked, ascending
//                    by E(x,r,y); consumed from the tail only.
//
// With kTransposed = false the source is G, the target G', and the tracker
// maintains rcNext'/rcNextElem'/rcPrev for the forward condition. With
// kTransposed = true the source is G', the target G, pairs <a,b> of the
// tracker are the pairs <b,a> of Z, and the same code maintains
// rcNext/rcNextElem/rcPrev' for the backward condition.
template <bool kTransposed>
class SupportTracker {
 public:
  SupportTracker(const FuzzyGraph& source, const NeighborIndex& source_index,
                 const FuzzyGraph& target, const NeighborIndex& target_index,
                 PairWorklist& worklist)
      : source_(&source),
        source_index_(&source_index),
        target_(&target),
        target_index_(&target_index),
        worklist_(&worklist),
        labels_(source_index.edge_label_count()),
        source_n_(source.vertex_count()),
        target_n_(target.vertex_count()),
        source_m_(source.edge_count()) {}

  // Builds every rcPrev vector and rcNext list from the current Z,
  // inheriting the order of the sorted neighbour vectors.
  void build() {
    std::size_t triples = labels_ * source_n_ * target_n_;
    std::size_t max_in_degree = source_index_->max_prev_size();
    lists_ = DenseListTable(source_n_, target_->edge_count(), triples,
                            target_index_->max_next_size(), max_in_degree);
    rc_prev_.assign(source_m_ * target_n_, max_in_degree);
    // Z in tracker orientation, so the scans below read it row by row.
    Relation transposed;
    if constexpr (kTransposed) transposed = worklist_->z().transposed();
    const Relation& z = kTransposed ? transposed : worklist_->z();
    EngineStats& stats = worklist_->stats();
    for (SymbolId r = 0; r < labels_; ++r)
      for (VertexId y = 0; y < source_n_; ++y) {
        auto prev = source_index_->prev(r, y);
        std::uint32_t offset = source_index_->prev_offset(r, y);
        for (VertexId x2 = 0; x2 < target_n_; ++x2) {
          std::size_t t = triple(r, y, x2);
          std::size_t out = rc_prev_block(offset, prev.size(), x2);
          std::uint32_t len = 0;
          for (std::uint32_t i = 0; i < prev.size(); ++i)
            if (z.contains(prev[i].vertex, x2)) rc_prev_.set(out + len++, i);
          lists_.set_aux(t, len);
          stats.rc_prev_initial += len;
          std::uint32_t base = target_index_->next_edge_begin(r, x2);
          for (const Neighbor& nb : target_index_->next(r, x2))
            if (z.contains(y, nb.vertex)) {
              lists_.push_back(t, y, base, static_cast<std::int32_t>(nb.edge));
              ++stats.rc_next_initial;
            }
        }
      }
  }

  // UpdateRcPrev over every triple, iterating r, then the G vertex, then
  // the G' vertex.
  void update_all() {
    for (SymbolId r = 0; r < labels_; ++r) {
      if constexpr (kTransposed) {
        for (VertexId x2 = 0; x2 < target_n_; ++x2)
          for (VertexId y = 0; y < source_n_; ++y) update(r, y, x2);
      } else {
        for (VertexId y = 0; y < source_n_; ++y)
          for (VertexId x2 = 0; x2 < target_n_; ++x2) update(r, y, x2);
      }
    }
  }

  // UpdateRcPrev(r,y,x'): d is the degree at the tail of rcNext[r,y,x']
  // (0 when empty); tail entries x of rcPrev[r,y,x'] with E(x,r,y) > d are
  // popped, and a popped x with Z(x,x') moves <x,x'> from Z to the queue.
  void update(SymbolId r, VertexId y, VertexId x2) {
    std::size_t t = triple(r, y, x2);
    std::uint32_t len = lists_.aux(t);
    if (len == 0) return;
    std::int32_t last = lists_.back(t, target_index_->next_edge_begin(r, x2));
    Degree d = last == DenseListTable::kNil
                   ? Degree::zero()
                   : target_->edge(static_cast<EdgeId>(last)).degree;
    std::size_t entries = rc_prev_begin(r, y, x2);
    auto prev = source_index_->prev(r, y);
    EngineStats& stats = worklist_->stats();
    std::uint32_t kept = len;
    while (kept > 0) {
      const Neighbor& x = prev[rc_prev_[entries + kept - 1]];
      if (x.degree <= d) break;
      --kept;
      ++stats.rc_prev_pops;
      if (in_z(x.vertex, x2)) remove(x.vertex, x2);
    }
    if (kept != len) lists_.set_aux(t, kept);
  }

  // Reacts to the extraction of <y,y'> (tracker orientation): for every r
  // and x' ∈ Prev_r(y'), unlink the element of edge <x',r,y'> from
  // rcNext[r,y,x'] and re-run the update for that triple. The update can
  // only pop when the tail degree of the list dropped, i.e. when the
  // element removed was the tail.
  void on_extracted(VertexId y, VertexId y2) {
    EngineStats& stats = worklist_->stats();
    for (SymbolId r = 0; r < labels_; ++r)
      for (const Neighbor& x2 : target_index_->prev(r, y2)) {
        auto e = static_cast<std::int32_t>(x2.edge);
        if (!lists_.linked(y, e))
          throw std::logic_error("rcNext element missing for an extracted pair");
        bool tail = lists_.erase(triple(r, y, x2.vertex), y,
                                 target_index_->next_edge_begin(r, x2.vertex), e);
        ++stats.rc_next_deletions;
        if (tail) update(r, y, x2.vertex);
      }
  }

  // Issues cache prefetches for the structures on_extracted(y, y2) touches.
  void prefetch(VertexId y, VertexId y2) const {
    for (SymbolId r = 0; r < labels_; ++r)
      for (const Neighbor& x2 : target_index_->prev(r, y2)) {
        lists_.prefetch(triple(r, y, x2.vertex), y, static_cast<std::int32_t>(x2.edge));
        rc_prev_.prefetch(rc_prev_begin(r, y, x2.vertex));
      }
  }

  // Keys of rcNext[r,y,x'] front to back.
  std::vector<VertexId> rc_next(SymbolId r, VertexId y, VertexId x2) const {
    std::vector<VertexId> keys;
    std::uint32_t base = target_index_->next_edge_begin(r, x2);
    for (std::int32_t e = lists_.front(triple(r, y, x2), base); e != DenseListTable::kNil;
         e = lists_.next(y, base, e))
      keys.push_back(target_->edge(static_cast<EdgeId>(e)).to);
    return keys;
  }

  // rcPrev[r,y,x'] front to back.
  std::vector<VertexId> rc_prev(SymbolId r, VertexId y, VertexId x2) const {
    std::vector<VertexId> out;
    std::size_t entries = rc_prev_begin(r, y, x2);
    auto prev = source_index_->prev(r, y);
    for (std::uint32_t i = 0; i < lists_.aux(triple(r, y, x2)); ++i)
      out.push_back(prev[rc_prev_[entries + i]].vertex);
    return out;
  }

  // Whether the element-table slot (y, e') references a list element.
  bool element_present(VertexId y, EdgeId e2) const {
    return lists_.linked(y, static_cast<std::int32_t>(e2));
  }

  // Checks the structure specifications and the rcPrev membership invariant
  // against Z and the pending pairs. Returns a description of the first
  // discrepancy. Cost O(|Σ_E|·n²·m); meant for instrumented test runs.
  std::optional<std::string> verify() const {
    const Relation& z = worklist_->z();
    Relation pending = worklist_->pending_relation();
    auto alive = [&](VertexId a, VertexId b) {
      return kTransposed ? (z.contains(b, a) || pending.contains(b, a))
                         : (z.contains(a, b) || pending.contains(a, b));
    };
    auto where = [](const char* what, SymbolId r, VertexId y, VertexId x2) {
      return std::string(what) + " at <" + std::to_string(r) + "," +
             std::to_string(y) + "," + std::to_string(x2) + ">" +
             (kTransposed ? " (dual)" : "");
    };
    for (VertexId y = 0; y < source_n_; ++y)
      for (EdgeId e = 0; e < target_->edge_count(); ++e)
        if (element_present(y, e) != alive(y, target_->edge(e).to))
          return where("element table mismatch", target_->edge(e).label, y,
                       target_->edge(e).from);
    for (SymbolId r = 0; r < labels_; ++r)
      for (VertexId y = 0; y < source_n_; ++y)
        for (VertexId x2 = 0; x2 < target_n_; ++x2) {
          std::vector<VertexId> expected;
          for (const Neighbor& nb : target_index_->next(r, x2))
            if (alive(y, nb.vertex)) expected.push_back(nb.vertex);
          if (rc_next(r, y, x2) != expected)
            return where("rcNext contents", r, y, x2);
          std::int32_t last =
              lists_.back(triple(r, y, x2), target_index_->next_edge_begin(r, x2));
          Degree d = last == DenseListTable::kNil
                         ? Degree::zero()
                         : target_->edge(static_cast<EdgeId>(last)).degree;
          std::size_t entries = rc_prev_begin(r, y, x2);
          auto prev = source_index_->prev(r, y);
          std::uint32_t len = lists_.aux(triple(r, y, x2));
          for (std::uint32_t i = 0; i < len; ++i) {
            if (i > 0 && rc_prev_[entries + i] <= rc_prev_[entries + i - 1])
              return where("rcPrev order", r, y, x2);
            if (prev[rc_prev_[entries + i]].degree > d)
              return where("rcPrev entry above support", r, y, x2);
          }
          std::vector<VertexId> members = rc_prev(r, y, x2);
          for (const Neighbor& x : source_index_->prev(r, y))
            if (in_z(x.vertex, x2) &&
                std::find(members.begin(), members.end(), x.vertex) == members.end())
              return where("Z pair missing from rcPrev", r, y, x2);
        }
    return std::nullopt;
  }

 private:
  // List heads are laid out in the order update_all visits them.
  std::size_t triple(SymbolId r, VertexId y, VertexId x2) const {
    if constexpr (kTransposed)
      return (static_cast<std::size_t>(r) * target_n_ + x2) * source_n_ + y;
    else
      return (static_cast<std::size_t>(r) * source_n_ + y) * target_n_ + x2;
  }

  // rcPrev storage keeps, for each <r,y>, one block of |Prev_r(y)| slots per
  // target vertex; the blocks of one <r,y> are contiguous.
  std::size_t rc_prev_block(std::uint32_t prev_offset, std::size_t prev_size,
                            VertexId x2) const {
    return static_cast<std::size_t>(prev_offset) * target_n_ + x2 * prev_size;
  }
  std::size_t rc_prev_begin(SymbolId r, VertexId y, VertexId x2) const {
    return rc_prev_block(source_index_->prev_offset(r, y),
                         source_index_->prev(r, y).size(), x2);
  }

  bool in_z(VertexId a, VertexId b) const {
    if constexpr (kTransposed)
      return worklist_->z().contains(b, a);
    else
      return worklist_->z().contains(a, b);
  }

  void remove(VertexId a, VertexId b) {
    if constexpr (kTransposed)
      worklist_->remove(b, a);
    else
      worklist_->remove(a, b);
  }

  const FuzzyGraph* source_;
  const NeighborIndex* source_index_;
  const FuzzyGraph* target_;
  const NeighborIndex* target_index_;
  PairWorklist* worklist_;
  std::size_t labels_;
  std::size_t source_n_;
  std::size_t target_n_;
  std::size_t source_m_;
  DenseListTable lists_;
  // rcPrev[r,y,x'] as indices into Prev_r(y), at rc_prev_begin(r,y,x').
  // The current length of each vector is the aux word of the triple's list
  // head.
  IndexArray rc_prev_;
};

}  // namespace fuzzysim
