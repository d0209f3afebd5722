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
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fuzzysim/dirsim_engine.hpp"
#include "fuzzysim/graph.hpp"
#include "fuzzysim/io.hpp"
#include "fuzzysim/relation.hpp"
#include "fuzzysim/sim_engine.hpp"
#include "fuzzysim/symbols.hpp"

namespace fuzzysim {

using StateId = VertexId;

struct Transition {
  StateId from;
  SymbolId symbol;
  StateId to;
  Degree degree;
};

// Names beginning with this character are reserved for the graph encoding.
inline constexpr char kReservedPrefix = '$';

// A finite fuzzy automaton <Q, δ, σ, τ> over an alphabet of symbol ids.
class FuzzyAutomaton {
 public:
  std::size_t state_count() const { return names_.size(); }
  const std::string& state_name(StateId q) const { return names_.at(q); }
  const std::vector<std::string>& state_names() const { return names_; }
  std::optional<StateId> find_state(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Sorted, duplicate-free.
  const std::vector<SymbolId>& alphabet() const { return alphabet_; }

  // Nonzero transitions sorted by (from, symbol, to).
  const std::vector<Transition>& transitions() const { return transitions_; }

  Degree transition(StateId from, SymbolId r, StateId to) const {
    auto key = std::make_tuple(from, r, to);
    auto it = std::lower_bound(
        transitions_.begin(), transitions_.end(), key,
        [](const Transition& t, const auto& k) {
          return std::make_tuple(t.from, t.symbol, t.to) < k;
        });
    if (it == transitions_.end() ||
        std::make_tuple(it->from, it->symbol, it->to) != key)
      return Degree::zero();
    return it->degree;
  }

  Degree initial(StateId q) const { return initial_.at(q); }
  Degree terminal(StateId q) const { return terminal_.at(q); }

 private:
  friend class AutomatonBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> index_;
  std::vector<SymbolId> alphabet_;
  std::vector<Transition> transitions_;
  std::vector<Degree> initial_;
  std::vector<Degree> terminal_;
};

class AutomatonBuilder {
 public:
  StateId add_state(std::string_view name) {
    if (!name.empty() && name.front() == kReservedPrefix)
      throw GraphError("state name '" + std::string(name) +
                       "' uses the reserved prefix '$'");
    auto it = a_.index_.find(std::string(name));
    if (it != a_.index_.end()) return it->second;
    auto id = static_cast<StateId>(a_.names_.size());
    a_.names_.emplace_back(name);
    a_.index_.emplace(a_.names_.back(), id);
    return id;
  }

  void add_states(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
      add_state("q" + std::to_string(a_.names_.size()));
  }

  void declare_symbol(SymbolId r) { symbols_.insert(r); }

  void set_initial(StateId q, Degree d) {
    check_state(q);
    if (!initial_.emplace(q, d).second)
      throw GraphError("duplicate initial degree for state '" + a_.names_[q] + "'");
  }

  void set_terminal(StateId q, Degree d) {
    check_state(q);
    if (!terminal_.emplace(q, d).second)
      throw GraphError("duplicate terminal degree for state '" + a_.names_[q] + "'");
  }

  void add_transition(StateId from, SymbolId r, StateId to, Degree d) {
    check_state(from);
    check_state(to);
    symbols_.insert(r);
    if (!transitions_.emplace(std::make_tuple(from, r, to), d).second)
      throw GraphError("duplicate transition from '" + a_.names_[from] + "' to '" +
                       a_.names_[to] + "'");
  }

  FuzzyAutomaton build() && {
    if (a_.names_.empty()) throw GraphError("an automaton needs at least one state");
    std::size_t n = a_.names_.size();
    a_.initial_.assign(n, Degree::zero());
    a_.terminal_.assign(n, Degree::zero());
    for (auto [q, d] : initial_) a_.initial_[q] = d;
    for (auto [q, d] : terminal_) a_.terminal_[q] = d;
    a_.alphabet_.assign(symbols_.begin(), symbols_.end());
    for (const auto& [key, d] : transitions_) {
      if (d.is_zero()) continue;
      auto [from, r, to] = key;
      a_.transitions_.push_back({from, r, to, d});
    }
    return std::move(a_);
  }

 private:
  void check_state(StateId q) const {
    if (q >= a_.names_.size())
      throw GraphError("state id " + std::to_string(q) + " out of range");
  }

  FuzzyAutomaton a_;
  std::set<SymbolId> symbols_;
  std::map<StateId, Degree> initial_;
  std::map<StateId, Degree> terminal_;
  std::map<std::tuple<StateId, SymbolId, StateId>, Degree> transitions_;
};

// Parses the automaton file format:
//   state <name>
//   symbol <name>                (optional alphabet declaration)
//   initial <state> <degree>
//   terminal <state> <degree>
//   trans <from> <symbol> <to> <degree>
// The alphabet is the declared symbols plus those used on trans lines.
inline FuzzyAutomaton parse_automaton(std::string_view text, Alphabet& alphabet) {
  AutomatonBuilder builder;
  auto symbol = [&](std::size_t line, const detail::Token& tok) {
    if (tok.text.front() == kReservedPrefix)
      throw ParseError(line, tok.column,
                       "symbol '" + std::string(tok.text) + "' uses the reserved prefix '$'");
    return alphabet.edge_labels.intern(tok.text);
  };
  detail::for_each_line(text, [&](std::size_t line,
                                   const std::vector<detail::Token>& tok) {
    std::string_view keyword = tok[0].text;
    try {
      if (keyword == "state") {
        detail::expect_arity(line, tok, 1);
        builder.add_state(tok[1].text);
      } else if (keyword == "symbol") {
        detail::expect_arity(line, tok, 1);
        builder.declare_symbol(symbol(line, tok[1]));
      } else if (keyword == "initial" || keyword == "terminal") {
        detail::expect_arity(line, tok, 2);
        Degree d = detail::parse_degree_token(line, tok[2]);
        StateId q = builder.add_state(tok[1].text);
        if (keyword == "initial")
          builder.set_initial(q, d);
        else
          builder.set_terminal(q, d);
      } else if (keyword == "trans") {
        detail::expect_arity(line, tok, 4);
        Degree d = detail::parse_degree_token(line, tok[4]);
        StateId from = builder.add_state(tok[1].text);
        SymbolId r = symbol(line, tok[2]);
        StateId to = builder.add_state(tok[3].text);
        builder.add_transition(from, r, to, d);
      } else {
        throw ParseError(line, tok[0].column,
                         "unknown directive '" + std::string(keyword) + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(line, tok[0].column, e.what());
    }
  });
  try {
    return std::move(builder).build();
  } catch (const GraphError& e) {
    throw ParseError(1, 1, e.what());
  }
}

// The fuzzy graph corresponding to an automaton, plus its two new vertices.
struct EncodedGraph {
  FuzzyGraph graph;
  VertexId initial_vertex;
  VertexId final_vertex;
};

// Reserved names used by the encoding.
inline constexpr std::string_view kInitialMarker = "$i";
inline constexpr std::string_view kFinalMarker = "$f";
inline constexpr std::string_view kStateMarker = "$s";
inline constexpr std::string_view kEmptyAlphabetSymbol = "$eps";
inline constexpr std::string_view kInitialVertexName = "$init";
inline constexpr std::string_view kFinalVertexName = "$final";

// Builds G = <Q ∪ {v_i, v_f}, E, L> with, for every r ∈ Σ and states x, y:
//   E(x,r,y) = δ(x,r,y),  E(v_i,r,x) = σ(x),  E(x,r,v_f) = τ(x),
//   L(v_i)($i) = L(v_f)($f) = 1.
// Every ordinary state additionally carries L(q)($s) = 1 (and the two new
// vertices 0), which keeps the largest graph simulation from relating a
// state to a synthetic vertex. An empty alphabet is encoded with the single
// edge label $eps so that σ and τ remain visible.
inline EncodedGraph encode(const FuzzyAutomaton& a, Alphabet& alphabet) {
  for (const std::string& name : a.state_names())
    if (!name.empty() && name.front() == kReservedPrefix)
      throw GraphError("state name '" + name + "' collides with the reserved prefix '$'");
  for (SymbolId r : a.alphabet())
    if (r < alphabet.edge_labels.size()) {
      const std::string& s = alphabet.edge_labels.name(r);
      if (!s.empty() && s.front() == kReservedPrefix)
        throw GraphError("symbol '" + s + "' collides with the reserved prefix '$'");
    }
  SymbolId mark_i = alphabet.vertex_labels.intern(kInitialMarker);
  SymbolId mark_f = alphabet.vertex_labels.intern(kFinalMarker);
  SymbolId mark_s = alphabet.vertex_labels.intern(kStateMarker);
  std::vector<SymbolId> sigma = a.alphabet();
  if (sigma.empty()) sigma.push_back(alphabet.edge_labels.intern(kEmptyAlphabetSymbol));

  GraphBuilder b;
  for (StateId q = 0; q < a.state_count(); ++q) b.add_vertex(a.state_name(q));
  VertexId vi = b.add_vertex(kInitialVertexName);
  VertexId vf = b.add_vertex(kFinalVertexName);
  b.set_label(vi, mark_i, Degree::one());
  b.set_label(vf, mark_f, Degree::one());
  for (StateId q = 0; q < a.state_count(); ++q) b.set_label(q, mark_s, Degree::one());
  for (const Transition& t : a.transitions())
    b.add_edge(t.from, t.symbol, t.to, t.degree);
  for (SymbolId r : sigma)
    for (StateId q = 0; q < a.state_count(); ++q) {
      if (!a.initial(q).is_zero()) b.add_edge(vi, r, q, a.initial(q));
      if (!a.terminal(q).is_zero()) b.add_edge(q, r, vf, a.terminal(q));
    }
  return {std::move(b).build(), vi, vf};
}

// Z ∪ {<v_i,v'_i>, <v_f,v'_f>} over the encodings' vertex sets.
inline Relation lift_relation(const Relation& z, const EncodedGraph& g,
                              const EncodedGraph& h) {
  Relation out(g.graph.vertex_count(), h.graph.vertex_count());
  for (auto [x, x2] : z.pairs()) out.insert(x, x2);
  out.insert(g.initial_vertex, h.initial_vertex);
  out.insert(g.final_vertex, h.final_vertex);
  return out;
}

enum class AutomatonViolationKind {
  kInitial,             // σ(x) > 0 without a related x' with σ(x) ≤ σ'(x')
  kTransition,          // δ(x,r,y) > 0 without a matching δ'(x',r,y')
  kTerminal,            // Z(x,x'), τ(x) > 0, τ(x) ≰ τ'(x')
  kBackwardInitial,     // σ'(x') > 0 without a related x with σ'(x') ≤ σ(x)
  kBackwardTransition,  // δ'(x',r,y') > 0 without a matching δ(x,r,y)
  kBackwardTerminal,    // Z(x,x'), τ'(x') > 0, τ'(x') ≰ τ(x)
};

inline const char* to_string(AutomatonViolationKind kind) {
  switch (kind) {
    case AutomatonViolationKind::kInitial: return "initial";
    case AutomatonViolationKind::kTransition: return "transition";
    case AutomatonViolationKind::kTerminal: return "terminal";
    case AutomatonViolationKind::kBackwardInitial: return "backward-initial";
    case AutomatonViolationKind::kBackwardTransition: return "backward-transition";
    case AutomatonViolationKind::kBackwardTerminal: return "backward-terminal";
  }
  return "?";
}

struct AutomatonViolation {
  AutomatonViolationKind kind;
  StateId x = 0;        // the state of A (or of A' for kBackwardInitial)
  StateId x_prime = 0;
  StateId third = 0;    // y for kTransition, y' for kBackwardTransition
  SymbolId symbol = 0;

  friend bool operator==(const AutomatonViolation&, const AutomatonViolation&) = default;
};

struct AutomataCheckOptions {
  bool directed = false;
  // Compare with < instead of ≤ (the engines always use ≤).
  bool strict = false;
  // For directed checks: also require the duals of the initial and terminal
  // conditions. These are exactly what the graph encoding imposes through
  // the backward condition at <v_i,v'_i> and on edges into v'_f.
  bool dual_boundary = true;
};

// nullopt when Z is a (directed) simulation between A and A'.
inline std::optional<AutomatonViolation> check_automata_simulation(
    const Relation& z, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
    AutomataCheckOptions opt = {}) {
  auto leq = [&](Degree lhs, Degree rhs) { return opt.strict ? lhs < rhs : lhs <= rhs; };
  using K = AutomatonViolationKind;
  for (StateId x = 0; x < a.state_count(); ++x) {
    if (a.initial(x).is_zero()) continue;
    bool found = false;
    for (StateId x2 = 0; x2 < b.state_count() && !found; ++x2)
      found = z.contains(x, x2) && leq(a.initial(x), b.initial(x2));
    if (!found) return AutomatonViolation{K::kInitial, x};
  }
  bool dual = opt.directed && opt.dual_boundary;
  if (dual)
    for (StateId x2 = 0; x2 < b.state_count(); ++x2) {
      if (b.initial(x2).is_zero()) continue;
      bool found = false;
      for (StateId x = 0; x < a.state_count() && !found; ++x)
        found = z.contains(x, x2) && leq(b.initial(x2), a.initial(x));
      if (!found) return AutomatonViolation{K::kBackwardInitial, 0, x2};
    }
  for (auto [x, x2] : z.pairs()) {
    if (!a.terminal(x).is_zero() && !leq(a.terminal(x), b.terminal(x2)))
      return AutomatonViolation{K::kTerminal, x, x2};
    if (dual && !b.terminal(x2).is_zero() && !leq(b.terminal(x2), a.terminal(x)))
      return AutomatonViolation{K::kBackwardTerminal, x, x2};
    for (const Transition& t : a.transitions()) {
      if (t.from != x) continue;
      bool found = false;
      for (const Transition& u : b.transitions())
        if (u.from == x2 && u.symbol == t.symbol && z.contains(t.to, u.to) &&
            leq(t.degree, u.degree)) {
          found = true;
          break;
        }
      if (!found) return AutomatonViolation{K::kTransition, x, x2, t.to, t.symbol};
    }
    if (!opt.directed) continue;
    for (const Transition& u : b.transitions()) {
      if (u.from != x2) continue;
      bool found = false;
      for (const Transition& t : a.transitions())
        if (t.from == x && t.symbol == u.symbol && z.contains(t.to, u.to) &&
            leq(u.degree, t.degree)) {
          found = true;
          break;
        }
      if (!found)
        return AutomatonViolation{K::kBackwardTransition, x, x2, u.to, u.symbol};
    }
  }
  return std::nullopt;
}

// A relation over Q × Q' plus the verdict of the initial-state condition,
// which constrains (A, A', Z) as a whole rather than individual pairs.
struct AutomataSimulationResult {
  Relation relation;
  bool initial_satisfied = false;
};

class AlphabetMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace automata_detail {

template <class Engine>
AutomataSimulationResult run_encoded(const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                                     Alphabet& alphabet) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetMismatch("the automata are over different alphabets");
  EncodedGraph g = encode(a, alphabet);
  EncodedGraph h = encode(b, alphabet);
  Engine engine(g.graph, h.graph);
  const Relation& z = engine.run();
  AutomataSimulationResult out{Relation(a.state_count(), b.state_count()),
                               z.contains(g.initial_vertex, h.initial_vertex)};
  for (StateId x = 0; x < a.state_count(); ++x)
    for (StateId x2 = 0; x2 < b.state_count(); ++x2)
      if (z.contains(x, x2)) out.relation.insert(x, x2);
  return out;
}

}  // namespace automata_detail

// Encodes both automata, runs the simulation engine and drops the pairs of
// new vertices. Both automata must be parsed against the same Alphabet.
inline AutomataSimulationResult largest_automata_simulation(const FuzzyAutomaton& a,
                                                            const FuzzyAutomaton& b,
                                                            Alphabet& alphabet) {
  return automata_detail::run_encoded<SimulationEngine>(a, b, alphabet);
}

inline AutomataSimulationResult largest_automata_directed_simulation(
    const FuzzyAutomaton& a, const FuzzyAutomaton& b, Alphabet& alphabet) {
  return automata_detail::run_encoded<DirectedSimulationEngine>(a, b, alphabet);
}

// Automaton-level reference fixpoint: start from the pairs meeting the
// terminal condition(s), delete transition-condition violators until
// stable, then evaluate the initial condition(s) on the result.
inline AutomataSimulationResult naive_largest_automata_simulation(
    const FuzzyAutomaton& a, const FuzzyAutomaton& b, AutomataCheckOptions opt = {}) {
  auto leq = [&](Degree lhs, Degree rhs) { return opt.strict ? lhs < rhs : lhs <= rhs; };
  bool dual = opt.directed && opt.dual_boundary;
  Relation z(a.state_count(), b.state_count());
  for (StateId x = 0; x < a.state_count(); ++x)
    for (StateId x2 = 0; x2 < b.state_count(); ++x2) {
      bool ok = a.terminal(x).is_zero() || leq(a.terminal(x), b.terminal(x2));
      if (dual) ok = ok && (b.terminal(x2).is_zero() || leq(b.terminal(x2), a.terminal(x)));
      if (ok) z.insert(x, x2);
    }
  auto violates = [&](StateId x, StateId x2) {
    for (const Transition& t : a.transitions()) {
      if (t.from != x) continue;
      bool found = false;
      for (const Transition& u : b.transitions())
        found = found || (u.from == x2 && u.symbol == t.symbol &&
                          z.contains(t.to, u.to) && leq(t.degree, u.degree));
      if (!found) return true;
    }
    if (!opt.directed) return false;
    for (const Transition& u : b.transitions()) {
      if (u.from != x2) continue;
      bool found = false;
      for (const Transition& t : a.transitions())
        found = found || (t.from == x && t.symbol == u.symbol &&
                          z.contains(t.to, u.to) && leq(u.degree, t.degree));
      if (!found) return true;
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId x = 0; x < a.state_count(); ++x)
      for (StateId x2 = 0; x2 < b.state_count(); ++x2)
        if (z.contains(x, x2) && violates(x, x2)) {
          z.erase(x, x2);
          changed = true;
        }
  }
  bool satisfied = true;
  for (StateId x = 0; x < a.state_count() && satisfied; ++x) {
    if (a.initial(x).is_zero()) continue;
    bool found = false;
    for (StateId x2 = 0; x2 < b.state_count(); ++x2)
      found = found || (z.contains(x, x2) && leq(a.initial(x), b.initial(x2)));
    satisfied = found;
  }
  if (dual)
    for (StateId x2 = 0; x2 < b.state_count() && satisfied; ++x2) {
      if (b.initial(x2).is_zero()) continue;
      bool found = false;
      for (StateId x = 0; x < a.state_count(); ++x)
        found = found || (z.contains(x, x2) && leq(b.initial(x2), a.initial(x)));
      satisfied = found;
    }
  return {z, satisfied};
}

}  // namespace fuzzysim
