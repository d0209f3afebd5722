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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fuzzysim/degree.hpp"
#include "fuzzysim/symbols.hpp"

namespace fuzzysim {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct LabelEntry {
  SymbolId symbol;
  Degree degree;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

struct Edge {
  VertexId from;
  SymbolId label;
  VertexId to;
  Degree degree;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Thrown for structurally invalid graph or automaton construction
// (duplicate entries, unknown vertices, reserved names).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite fuzzy labeled graph <V, E, L>. Immutable once built.
//
// Vertices are 0..vertex_count()-1. Only nonzero label entries and nonzero
// edges are stored. Edges are kept sorted lexicographically by
// (from, label, to); an edge's position in that order is its EdgeId.
class FuzzyGraph {
 public:
  FuzzyGraph() = default;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Nonzero label entries of `v`, sorted by symbol id.
  std::span<const LabelEntry> label(VertexId v) const {
    return {labels_.data() + label_offsets_[v],
            labels_.data() + label_offsets_[v + 1]};
  }

  Degree label_degree(VertexId v, SymbolId p) const {
    auto entries = label(v);
    auto it = std::lower_bound(
        entries.begin(), entries.end(), p,
        [](const LabelEntry& e, SymbolId s) { return e.symbol < s; });
    return it != entries.end() && it->symbol == p ? it->degree : Degree::zero();
  }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::optional<EdgeId> edge_id(VertexId from, SymbolId r, VertexId to) const {
    auto key = std::make_tuple(from, r, to);
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), key, [](const Edge& e, const auto& k) {
          return std::make_tuple(e.from, e.label, e.to) < k;
        });
    if (it == edges_.end() || std::make_tuple(it->from, it->label, it->to) != key)
      return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  Degree edge_degree(VertexId from, SymbolId r, VertexId to) const {
    auto e = edge_id(from, r, to);
    return e ? edges_[*e].degree : Degree::zero();
  }

  // One past the largest edge-label id used by any edge (0 if edgeless).
  SymbolId edge_label_bound() const { return edge_label_bound_; }

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> label_offsets_{0};
  std::vector<LabelEntry> labels_;
  std::vector<Edge> edges_;
  SymbolId edge_label_bound_ = 0;
};

// |{<x,r,y> : E(x,r,y) > 0}|.
inline std::size_t nonzero_edge_count(const FuzzyGraph& g) { return g.edge_count(); }

// f <= g pointwise over the vertex-label alphabet; absent entries read as 0.
inline bool label_leq(std::span<const LabelEntry> lhs,
                      std::span<const LabelEntry> rhs) {
  auto r = rhs.begin();
  for (const LabelEntry& l : lhs) {
    while (r != rhs.end() && r->symbol < l.symbol) ++r;
    if (r == rhs.end() || r->symbol != l.symbol || l.degree > r->degree)
      return false;
  }
  return true;
}

// Accumulates vertices, labels and edges, then produces a FuzzyGraph.
// Vertex ids follow first-appearance order. Zero degrees are accepted and
// dropped; setting the same label entry or edge twice is a GraphError.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string_view name) {
    auto it = graph_.index_.find(std::string(name));
    if (it != graph_.index_.end()) return it->second;
    auto id = static_cast<VertexId>(graph_.names_.size());
    graph_.names_.emplace_back(name);
    graph_.index_.emplace(graph_.names_.back(), id);
    return id;
  }

  // Adds vertices named "0".."count-1" (or continuing the numbering).
  void add_vertices(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
      add_vertex(std::to_string(graph_.names_.size()));
  }

  std::size_t vertex_count() const { return graph_.names_.size(); }

  void set_label(VertexId v, SymbolId p, Degree d) {
    check_vertex(v);
    if (!labels_.emplace(std::make_pair(v, p), d).second)
      throw GraphError("duplicate label entry for vertex '" +
                       graph_.names_[v] + "'");
  }

  void add_edge(VertexId from, SymbolId r, VertexId to, Degree d) {
    check_vertex(from);
    check_vertex(to);
    if (!edges_.emplace(std::make_tuple(from, r, to), d).second)
      throw GraphError("duplicate edge from '" + graph_.names_[from] + "' to '" +
                       graph_.names_[to] + "'");
  }

  FuzzyGraph build() && {
    std::size_t n = graph_.names_.size();
    graph_.label_offsets_.assign(n + 1, 0);
    for (const auto& [key, d] : labels_)
      if (!d.is_zero()) ++graph_.label_offsets_[key.first + 1];
    for (std::size_t v = 0; v < n; ++v)
      graph_.label_offsets_[v + 1] += graph_.label_offsets_[v];
    graph_.labels_.clear();
    for (const auto& [key, d] : labels_)  // map order: by vertex, then symbol
      if (!d.is_zero()) graph_.labels_.push_back({key.second, d});
    graph_.edges_.clear();
    for (const auto& [key, d] : edges_) {
      if (d.is_zero()) continue;
      auto [from, r, to] = key;
      graph_.edges_.push_back({from, r, to, d});
      graph_.edge_label_bound_ = std::max(graph_.edge_label_bound_, r + 1);
    }
    return std::move(graph_);
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= graph_.names_.size())
      throw GraphError("vertex id " + std::to_string(v) + " out of range");
  }

  FuzzyGraph graph_;
  std::map<std::pair<VertexId, SymbolId>, Degree> labels_;
  std::map<std::tuple<VertexId, SymbolId, VertexId>, Degree> edges_;
};

// max of the two graphs' edge-label bounds: the |Σ_E| of the instance.
inline std::size_t shared_edge_label_count(const FuzzyGraph& g,
                                           const FuzzyGraph& h) {
  return std::max(g.edge_label_bound(), h.edge_label_bound());
}

}  // namespace fuzzysim
