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
#include <optional>
#include <span>
#include <vector>

#include "fuzzysim/graph.hpp"

namespace fuzzysim {

// One entry of Next_r(x) or Prev_r(y): the neighbouring vertex, the degree
// of the connecting edge and that edge's id.
struct Neighbor {
  VertexId vertex;
  Degree degree;
  EdgeId edge;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Next_r(x) and Prev_r(y) for every edge label r and vertex, in CSR form.
// Every vector is sorted ascending by edge degree, ties by vertex id.
class NeighborIndex {
 public:
  NeighborIndex() = default;

  NeighborIndex(const FuzzyGraph& g, std::size_t edge_label_count)
      : labels_(std::max<std::size_t>(edge_label_count, g.edge_label_bound())),
        vertices_(g.vertex_count()) {
    std::size_t slots = labels_ * vertices_;
    next_offsets_.assign(slots + 1, 0);
    prev_offsets_.assign(slots + 1, 0);
    for (const Edge& e : g.edges()) {
      ++next_offsets_[slot(e.label, e.from) + 1];
      ++prev_offsets_[slot(e.label, e.to) + 1];
    }
    for (std::size_t s = 0; s < slots; ++s) {
      next_offsets_[s + 1] += next_offsets_[s];
      prev_offsets_[s + 1] += prev_offsets_[s];
    }
    next_edge_begin_.assign(slots, 0);
    for (EdgeId id = g.edge_count(); id-- > 0;)
      next_edge_begin_[slot(g.edges()[id].label, g.edges()[id].from)] = id;
    next_.resize(g.edge_count());
    prev_.resize(g.edge_count());
    std::vector<std::uint32_t> next_fill(next_offsets_.begin(), next_offsets_.end() - 1);
    std::vector<std::uint32_t> prev_fill(prev_offsets_.begin(), prev_offsets_.end() - 1);
    auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
      const Edge& e = edges[id];
      next_[next_fill[slot(e.label, e.from)]++] = {e.to, e.degree, id};
      prev_[prev_fill[slot(e.label, e.to)]++] = {e.from, e.degree, id};
    }
    auto by_degree = [](const Neighbor& a, const Neighbor& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.vertex < b.vertex;
    };
    for (std::size_t s = 0; s < slots; ++s) {
      std::sort(next_.begin() + next_offsets_[s], next_.begin() + next_offsets_[s + 1],
                by_degree);
      std::sort(prev_.begin() + prev_offsets_[s], prev_.begin() + prev_offsets_[s + 1],
                by_degree);
    }
  }

  std::size_t edge_label_count() const { return labels_; }
  std::size_t vertex_count() const { return vertices_; }

  std::span<const Neighbor> next(SymbolId r, VertexId x) const {
    std::size_t s = slot(r, x);
    return {next_.data() + next_offsets_[s], next_.data() + next_offsets_[s + 1]};
  }

  std::span<const Neighbor> prev(SymbolId r, VertexId y) const {
    std::size_t s = slot(r, y);
    return {prev_.data() + prev_offsets_[s], prev_.data() + prev_offsets_[s + 1]};
  }

  // Position of prev(r, y) inside the flat prev storage; the engines address
  // filtered copies of these vectors by the same offsets.
  std::uint32_t prev_offset(SymbolId r, VertexId y) const {
    return prev_offsets_[slot(r, y)];
  }
  std::span<const Neighbor> all_prev() const { return prev_; }

  // The edges <x,r,y> of Next_r(x) hold consecutive edge ids starting here.
  std::uint32_t next_edge_begin(SymbolId r, VertexId x) const {
    return next_edge_begin_[slot(r, x)];
  }
  std::size_t max_next_size() const { return max_size(next_offsets_); }
  std::size_t max_prev_size() const { return max_size(prev_offsets_); }

  friend bool operator==(const NeighborIndex&, const NeighborIndex&) = default;

 private:
  std::size_t slot(SymbolId r, VertexId v) const { return r * vertices_ + v; }
  static std::size_t max_size(const std::vector<std::uint32_t>& offsets) {
    std::size_t best = 0;
    for (std::size_t s = 0; s + 1 < offsets.size(); ++s)
      best = std::max<std::size_t>(best, offsets[s + 1] - offsets[s]);
    return best;
  }

  std::size_t labels_ = 0;
  std::size_t vertices_ = 0;
  std::vector<std::uint32_t> next_offsets_{0};
  std::vector<std::uint32_t> prev_offsets_{0};
  std::vector<std::uint32_t> next_edge_begin_;
  std::vector<Neighbor> next_;
  std::vector<Neighbor> prev_;
};

inline NeighborIndex build_neighbor_index(const FuzzyGraph& g,
                                          std::size_t edge_label_count) {
  return NeighborIndex(g, edge_label_count);
}

inline NeighborIndex build_neighbor_index(const FuzzyGraph& g) {
  return NeighborIndex(g, g.edge_label_bound());
}

// Injective numbering of the nonzero edges of a graph: lexicographic
// <x,r,y> order, which is the order FuzzyGraph stores its edges in.
class EdgeIdTable {
 public:
  explicit EdgeIdTable(const FuzzyGraph& g) : graph_(&g) {}

  std::optional<EdgeId> id(VertexId from, SymbolId r, VertexId to) const {
    return graph_->edge_id(from, r, to);
  }
  std::size_t size() const { return graph_->edge_count(); }
  const Edge& edge(EdgeId e) const { return graph_->edge(e); }

 private:
  const FuzzyGraph* graph_;
};

}  // namespace fuzzysim
