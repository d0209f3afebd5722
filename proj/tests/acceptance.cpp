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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace fuzzysim {
namespace {

using testing::example21;
using testing::example23;
using testing::named;
using testing::random_pair;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kGoldenMaxMs = 1.0;            // criteria 1 and 2
constexpr double kOracleSuiteMaxSeconds = 60.0; // criterion 5
constexpr double kMaxDoublingRatio = 4.5;       // criterion 8
constexpr double kLevelBand = 0.5;              // criterion 8, ±50% of the median
constexpr double kScalingMaxSeconds = 300.0;    // criterion 8

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

// Median wall time in milliseconds of `f` over `runs` calls.
double median_ms(int runs, const std::function<void()>& f) {
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) {
    auto start = Clock::now();
    f();
    t.push_back(seconds_since(start) * 1e3);
  }
  return median(t);
}

std::string fmt(double v, int precision = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

Outcome golden_simulation() {
  Outcome o;
  auto p = example21();
  Relation expected = named(p.g, p.h, {{"b", "e"}, {"c", "e"}, {"d", "f"}});
  if (compute_largest_simulation(p.g, p.h) != expected) o.fail("engine result differs");
  if (naive_largest_simulation(p.g, p.h) != expected) o.fail("naive oracle differs");
  if (worklist_largest_simulation(p.g, p.h) != expected) o.fail("worklist oracle differs");
  double ms = median_ms(21, [&] { compute_largest_simulation(p.g, p.h); });
  if (ms >= kGoldenMaxMs) o.fail("engine took " + fmt(ms) + " ms");
  if (o.pass) o.detail = "{<b,e>,<c,e>,<d,f>}, engine median " + fmt(ms, 4) + " ms";
  return o;
}

Outcome golden_directed() {
  Outcome o;
  auto p = example21();
  if (!compute_largest_directed_simulation(p.g, p.h).empty()) o.fail("engine result not empty");
  if (!naive_largest_directed_simulation(p.g, p.h).empty()) o.fail("naive oracle not empty");
  if (!worklist_largest_directed_simulation(p.g, p.h).empty())
    o.fail("worklist oracle not empty");
  double ms = median_ms(21, [&] { compute_largest_directed_simulation(p.g, p.h); });
  if (ms >= kGoldenMaxMs) o.fail("engine took " + fmt(ms) + " ms");
  if (o.pass) o.detail = "empty relation, engine median " + fmt(ms, 4) + " ms";
  return o;
}

Outcome golden_example23() {
  Outcome o;
  auto p = example23();
  Relation expected = named(
      p.g, p.h, {{"b", "e"}, {"b", "f"}, {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}});
  if (compute_largest_simulation(p.g, p.h) != expected) o.fail("simulation differs");
  if (compute_largest_directed_simulation(p.g, p.h) != expected)
    o.fail("directed simulation differs");
  if (o.pass) o.detail = "{b,c,d} x {e,f} for both engines";
  return o;
}

Outcome golden_traces() {
  Outcome o;
  auto p = example21();
  Relation init_z = named(p.g, p.h, {{"a", "e"}, {"b", "e"}, {"c", "e"}, {"d", "f"}});
  Relation init_pending = named(p.g, p.h, {{"a", "f"}, {"b", "f"}, {"c", "f"}});
  Relation dir_z = named(p.g, p.h, {{"a", "e"}, {"b", "e"}, {"d", "f"}});

  auto to_relation = [&](std::span<const VertexPair> pairs) {
    Relation r(p.g.vertex_count(), p.h.vertex_count());
    for (auto [x, x2] : pairs) r.insert(x, x2);
    return r;
  };
  Relation z, pending;
  EngineTrace trace;
  trace.after_initialize = [&](const Relation& zz, std::span<const VertexPair> q) {
    z = zz;
    pending = to_relation(q);
  };
  SimulationEngine sim(p.g, p.h, trace);
  sim.run();
  if (z != init_z || pending != init_pending) o.fail("simulation engine state after init");
  DirectedSimulationEngine dir(p.g, p.h, trace);
  dir.run();
  if (z != dir_z) o.fail("directed engine state before the main loop");

  WorklistOptions opt;
  opt.before_main_loop = [&](const Relation& zz, const Relation& pp) {
    z = zz;
    pending = pp;
  };
  WorklistOracle(p.g, p.h, false, opt).run();
  if (z != init_z || pending != init_pending) o.fail("worklist oracle state after init");
  WorklistOracle(p.g, p.h, true, opt).run();
  if (z != dir_z) o.fail("directed worklist oracle state before the main loop");
  if (o.pass) o.detail = "engine and worklist oracle checkpoints match";
  return o;
}

// All graphs on vertices {u, v} with one vertex label and one edge label,
// every label and edge degree drawn from {0, 0.5, 1}.
std::vector<FuzzyGraph> all_two_vertex_graphs(Alphabet& alphabet) {
  const std::array<Degree, 3> levels{Degree::zero(), *Degree::parse("0.5"), Degree::one()};
  SymbolId p = alphabet.vertex_labels.intern("p");
  SymbolId r = alphabet.edge_labels.intern("r");
  std::vector<FuzzyGraph> out;
  for (int code = 0; code < 729; ++code) {
    GraphBuilder b;
    b.add_vertex("u");
    b.add_vertex("v");
    int c = code;
    for (VertexId x = 0; x < 2; ++x, c /= 3)
      if (c % 3) b.set_label(x, p, levels[c % 3]);
    for (VertexId x = 0; x < 2; ++x)
      for (VertexId y = 0; y < 2; ++y, c /= 3)
        if (c % 3) b.add_edge(x, r, y, levels[c % 3]);
    out.push_back(std::move(b).build());
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto start = Clock::now();
  std::size_t compared = 0;
  auto compare = [&](const FuzzyGraph& g, const FuzzyGraph& h, const std::string& what) {
    if (compute_largest_simulation(g, h) != naive_largest_simulation(g, h) ||
        worklist_largest_simulation(g, h) != naive_largest_simulation(g, h))
      o.fail("simulation mismatch on " + what);
    if (compute_largest_directed_simulation(g, h) != naive_largest_directed_simulation(g, h) ||
        worklist_largest_directed_simulation(g, h) != naive_largest_directed_simulation(g, h))
      o.fail("directed simulation mismatch on " + what);
    ++compared;
  };

  Alphabet alphabet;
  auto graphs = all_two_vertex_graphs(alphabet);
  for (std::size_t i = 0; i < graphs.size() && o.pass; ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j)
      compare(graphs[i], graphs[j], "2-vertex pair " + std::to_string(i) + "/" + std::to_string(j));
  std::size_t exhaustive = compared;

  Rng rng(500);
  for (int i = 0; i < 500 && o.pass; ++i) {
    auto p = random_pair(rng, 6, 5);
    compare(p.g, p.h, "random pair " + std::to_string(i));
  }
  double s = seconds_since(start);
  if (s >= kOracleSuiteMaxSeconds) o.fail("suite took " + fmt(s, 1) + " s");
  if (o.pass)
    o.detail = std::to_string(exhaustive) + " exhaustive + " +
               std::to_string(compared - exhaustive) + " random pairs, 0 mismatches, " +
               fmt(s, 1) + " s";
  return o;
}

Outcome property_suite() {
  Outcome o;
  Rng rng(600);
  for (int i = 0; i < 200 && o.pass; ++i) {
    auto p = random_pair(rng, 12, 5, 2, 2);
    std::string c = " (graph " + std::to_string(i) + ")";
    Relation id = Relation::identity(p.g.vertex_count());
    Relation sim = compute_largest_simulation(p.g, p.g);
    Relation dir = compute_largest_directed_simulation(p.g, p.g);
    if (!id.is_subset_of(sim) || !compose(sim, sim).is_subset_of(sim))
      o.fail("auto-simulation is not a pre-order" + c);
    if (!id.is_subset_of(dir) || !compose(dir, dir).is_subset_of(dir))
      o.fail("directed auto-simulation is not a pre-order" + c);
    if (!compute_largest_directed_simulation(p.g, p.h)
             .is_subset_of(compute_largest_simulation(p.g, p.h)))
      o.fail("directed not contained in plain" + c);
  }
  for (int i = 0; i < 50 && o.pass; ++i) {
    auto p = random_pair(rng, 10, 4, 1, 2);
    RandomGraphOptions opt;
    opt.vertices = 1 + i % 10;
    opt.edges = 3 * opt.vertices;
    opt.edge_labels = 2;
    opt.levels = 4;
    FuzzyGraph k = random_graph(opt, p.alphabet, rng);
    std::string c = " (triple " + std::to_string(i) + ")";
    if (!compose(compute_largest_simulation(p.g, p.h), compute_largest_simulation(p.h, k))
             .is_subset_of(compute_largest_simulation(p.g, k)))
      o.fail("simulation composition not contained" + c);
    if (!compose(compute_largest_directed_simulation(p.g, p.h),
                 compute_largest_directed_simulation(p.h, k))
             .is_subset_of(compute_largest_directed_simulation(p.g, k)))
      o.fail("directed composition not contained" + c);
  }
  auto p = random_pair(rng, 15, 5, 2, 2);
  Relation sim = compute_largest_simulation(p.g, p.h);
  Relation dir = compute_largest_directed_simulation(p.g, p.h);
  for (int i = 0; i < 20 && o.pass; ++i) {
    auto pg = random_permutation(p.g.vertex_count(), rng);
    auto ph = random_permutation(p.h.vertex_count(), rng);
    FuzzyGraph g2 = permute_vertices(p.g, pg), h2 = permute_vertices(p.h, ph);
    Relation sim2 = compute_largest_simulation(g2, h2);
    Relation dir2 = compute_largest_directed_simulation(g2, h2);
    bool ok = sim2.size() == sim.size() && dir2.size() == dir.size();
    for (auto [x, x2] : sim.pairs()) ok = ok && sim2.contains(pg[x], ph[x2]);
    for (auto [x, x2] : dir.pairs()) ok = ok && dir2.contains(pg[x], ph[x2]);
    if (!ok) o.fail("not equivariant under permutation " + std::to_string(i));
  }
  if (o.pass) o.detail = "200 graphs, 50 triples, 20 permutations, 0 failures";
  return o;
}

Outcome automata_correspondence() {
  Outcome o;
  Rng rng(700);
  std::size_t relations = 0;
  for (int i = 0; i < 200 && o.pass; ++i) {
    Alphabet alphabet;
    RandomAutomatonOptions opt;
    opt.symbols = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::uniform_int_distribution<std::size_t> states(1, 5);
    opt.states = states(rng);
    FuzzyAutomaton a = random_automaton(opt, alphabet, rng);
    opt.states = states(rng);
    FuzzyAutomaton b = random_automaton(opt, alphabet, rng);
    std::string c = " (pair " + std::to_string(i) + ")";

    for (bool directed : {false, true}) {
      auto engine = directed ? largest_automata_directed_simulation(a, b, alphabet)
                             : largest_automata_simulation(a, b, alphabet);
      auto naive = naive_largest_automata_simulation(a, b, {.directed = directed});
      if (engine.relation != naive.relation || engine.initial_satisfied != naive.initial_satisfied)
        o.fail(std::string(directed ? "directed" : "plain") + " result differs" + c);
    }
    EncodedGraph g = encode(a, alphabet), h = encode(b, alphabet);
    for (int k = 0; k < 100; ++k) {
      double density = 0.1 + 0.8 * (k % 10) / 9.0;
      Relation z = random_relation(a.state_count(), b.state_count(), density, rng);
      Relation lifted = lift_relation(z, g, h);
      for (bool directed : {false, true}) {
        bool automata_ok = !check_automata_simulation(z, a, b, {.directed = directed});
        bool graph_ok = directed ? !check_directed_simulation(lifted, g.graph, h.graph)
                                 : !check_simulation(lifted, g.graph, h.graph);
        if (automata_ok != graph_ok) o.fail("membership correspondence fails" + c);
      }
      ++relations;
    }
  }
  if (o.pass)
    o.detail = "200 automata pairs, " + std::to_string(relations) +
               " candidate relations checked both ways, 0 failures";
  return o;
}

struct BenchRow {
  std::size_t trial, n, m, l;
  double sim, dirsim;
};

std::vector<BenchRow> run_bench(const std::string& args, Outcome& o) {
  auto r = testing::run_cli("bench --per-trial " + args);
  std::vector<BenchRow> rows;
  if (r.exit_code != 0) {
    o.fail("bench exited with " + std::to_string(r.exit_code));
    return rows;
  }
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    BenchRow row{};
    std::size_t pairs = 0;
    if (std::sscanf(line.c_str(), "%zu,%zu,%zu,%zu,%lf,%lf,%zu", &row.trial, &row.n, &row.m,
                    &row.l, &row.sim, &row.dirsim, &pairs) == 7)
      rows.push_back(row);
  }
  return rows;
}

// Median over trials of time(n_{k+1}) / time(n_k), with both sizes of a
// ratio measured back to back within the same trial.
Outcome scaling() {
  Outcome o;
  auto start = Clock::now();
  const std::vector<std::size_t> sizes{250, 500, 1000, 2000};
  auto rows = run_bench("--sizes 250,500,1000,2000 --density 5 --trials 5 --repeat 3 --seed 1", o);
  std::map<std::pair<std::size_t, std::size_t>, BenchRow> by;  // (trial, n)
  for (const BenchRow& r : rows) by[{r.trial, r.n}] = r;
  std::string ratios;
  for (int which = 0; which < 2 && o.pass; ++which) {
    const char* name = which ? "dirsim" : "sim";
    ratios += std::string(ratios.empty() ? "" : "; ") + name;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
      std::vector<double> per_trial;
      for (std::size_t t = 0; t < 5; ++t) {
        auto a = by.find({t, sizes[k]}), b = by.find({t, sizes[k + 1]});
        if (a == by.end() || b == by.end()) {
          o.fail("missing bench rows");
          break;
        }
        if (b->second.m < 4 * b->second.n || b->second.m > 6 * b->second.n)
          o.fail("m is not about 5n");
        per_trial.push_back(which ? b->second.dirsim / a->second.dirsim
                                  : b->second.sim / a->second.sim);
      }
      if (!o.pass) break;
      double ratio = median(per_trial);
      ratios += " " + fmt(ratio, 2);
      if (ratio > kMaxDoublingRatio)
        o.fail(std::string(name) + " ratio " + std::to_string(sizes[k]) + "->" +
               std::to_string(sizes[k + 1]) + " is " + fmt(ratio, 2));
    }
  }

  auto levels = run_bench("--sizes 1000 --density 5 --degree-levels 2,8,32 --trials 5 --repeat 3 --seed 2", o);
  std::string flat;
  for (int which = 0; which < 2 && o.pass; ++which) {
    std::map<std::size_t, std::vector<double>> times;
    for (const BenchRow& r : levels) times[r.l].push_back(which ? r.dirsim : r.sim);
    if (times.size() != 3) {
      o.fail("missing degree-level rows");
      break;
    }
    std::vector<double> medians;
    for (auto& [l, t] : times) medians.push_back(median(t));
    double center = median(medians);
    flat += std::string(flat.empty() ? "" : "; ") + (which ? "dirsim" : "sim");
    for (double m : medians) {
      flat += " " + fmt(m / center, 2);
      if (m < (1 - kLevelBand) * center || m > (1 + kLevelBand) * center)
        o.fail(std::string(which ? "dirsim" : "sim") + " time varies with l beyond +-50%");
    }
  }
  double s = seconds_since(start);
  if (s >= kScalingMaxSeconds) o.fail("scaling check took " + fmt(s, 1) + " s");
  if (o.pass)
    o.detail = "doubling ratios [" + ratios + "], l=2,8,32 relative [" + flat + "], " +
               fmt(s, 1) + " s";
  else
    o.detail += " (ratios [" + ratios + "])";
  return o;
}

}  // namespace
}  // namespace fuzzysim

int main() {
  using namespace fuzzysim;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"golden example, simulation", golden_simulation},
      {"golden example, directed simulation", golden_directed},
      {"golden example with six-pair result", golden_example23},
      {"golden traces", golden_traces},
      {"oracle equivalence", oracle_equivalence},
      {"property suite", property_suite},
      {"automata correspondence", automata_correspondence},
      {"scaling", scaling},
  };
  int failures = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
