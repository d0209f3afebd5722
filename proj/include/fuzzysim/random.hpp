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
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fuzzysim/automaton.hpp"
#include "fuzzysim/degree.hpp"
#include "fuzzysim/graph.hpp"
#include "fuzzysim/symbols.hpp"

namespace fuzzysim {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  std::size_t vertices = 0;
  std::size_t edges = 0;          // capped at vertices² · edge_labels
  std::size_t vertex_labels = 1;  // symbols p0, p1, ...
  std::size_t edge_labels = 1;    // symbols r0, r1, ...
  std::size_t levels = 5;         // degrees drawn from k/levels, k = 1..levels
  double label_probability = 0.5; // chance that L(x)(p) is nonzero
};

// Uniformly random degree among `levels` evenly spaced values in (0,1].
inline Degree random_level(Rng& rng, std::size_t levels) {
  std::uniform_int_distribution<std::uint64_t> pick(1, levels);
  return Degree::level(pick(rng), levels);
}

// Edges are distinct triples <x,r,y> drawn uniformly until the target count
// is reached. Vertex names are "0", "1", ...
inline FuzzyGraph random_graph(const RandomGraphOptions& opt, Alphabet& alphabet,
                               Rng& rng) {
  std::vector<SymbolId> p, r;
  for (std::size_t i = 0; i < opt.vertex_labels; ++i)
    p.push_back(alphabet.vertex_labels.intern("p" + std::to_string(i)));
  for (std::size_t i = 0; i < opt.edge_labels; ++i)
    r.push_back(alphabet.edge_labels.intern("r" + std::to_string(i)));

  GraphBuilder b;
  b.add_vertices(opt.vertices);
  std::bernoulli_distribution has_label(opt.label_probability);
  for (VertexId x = 0; x < opt.vertices; ++x)
    for (SymbolId s : p)
      if (has_label(rng)) b.set_label(x, s, random_level(rng, opt.levels));

  std::size_t slots = opt.vertices * opt.vertices * opt.edge_labels;
  std::size_t target = std::min(opt.edges, slots);
  if (target == 0) return std::move(b).build();
  std::uniform_int_distribution<std::size_t> vertex(0, opt.vertices - 1);
  std::uniform_int_distribution<std::size_t> label(0, opt.edge_labels - 1);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> used;
  while (used.size() < target) {
    auto key = std::make_tuple(vertex(rng), label(rng), vertex(rng));
    if (!used.insert(key).second) continue;
    auto [x, l, y] = key;
    b.add_edge(static_cast<VertexId>(x), r[l], static_cast<VertexId>(y),
               random_level(rng, opt.levels));
  }
  return std::move(b).build();
}

struct RandomAutomatonOptions {
  std::size_t states = 1;
  std::size_t symbols = 1;              // a0, a1, ...
  double transition_probability = 0.3;  // per <x,a,y>
  double initial_probability = 0.4;
  double terminal_probability = 0.4;
  std::size_t levels = 4;
};

inline FuzzyAutomaton random_automaton(const RandomAutomatonOptions& opt,
                                       Alphabet& alphabet, Rng& rng) {
  AutomatonBuilder b;
  b.add_states(opt.states);
  std::vector<SymbolId> sigma;
  for (std::size_t i = 0; i < opt.symbols; ++i) {
    sigma.push_back(alphabet.edge_labels.intern("a" + std::to_string(i)));
    b.declare_symbol(sigma.back());
  }
  std::bernoulli_distribution initial(opt.initial_probability);
  std::bernoulli_distribution terminal(opt.terminal_probability);
  std::bernoulli_distribution transition(opt.transition_probability);
  for (StateId q = 0; q < opt.states; ++q) {
    if (initial(rng)) b.set_initial(q, random_level(rng, opt.levels));
    if (terminal(rng)) b.set_terminal(q, random_level(rng, opt.levels));
  }
  for (StateId x = 0; x < opt.states; ++x)
    for (SymbolId a : sigma)
      for (StateId y = 0; y < opt.states; ++y)
        if (transition(rng)) b.add_transition(x, a, y, random_level(rng, opt.levels));
  return std::move(b).build();
}

// Each pair is included independently with the given probability.
inline Relation random_relation(std::size_t left, std::size_t right, double probability,
                                Rng& rng) {
  Relation z(left, right);
  std::bernoulli_distribution keep(probability);
  for (std::size_t x = 0; x < left; ++x)
    for (std::size_t x2 = 0; x2 < right; ++x2)
      if (keep(rng)) z.insert(x, x2);
  return z;
}

// A uniformly random permutation of 0..n-1.
inline std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// The graph with vertex v renamed to perm[v] (names follow the vertices).
inline FuzzyGraph permute_vertices(const FuzzyGraph& g, const std::vector<VertexId>& perm) {
  std::vector<VertexId> inverse(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) inverse[perm[v]] = static_cast<VertexId>(v);
  GraphBuilder b;
  for (VertexId w = 0; w < g.vertex_count(); ++w) b.add_vertex(g.vertex_name(inverse[w]));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const LabelEntry& l : g.label(v)) b.set_label(perm[v], l.symbol, l.degree);
  for (const Edge& e : g.edges()) b.add_edge(perm[e.from], e.label, perm[e.to], e.degree);
  return std::move(b).build();
}

}  // namespace fuzzysim
