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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzysim/fuzzysim.hpp"

namespace {

using namespace fuzzysim;
using Clock = std::chrono::steady_clock;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// key=value lines written to stderr by --stats.
class RunReport {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    lines_.push_back(key + "=" + s.str());
  }
  void print() const {
    for (const std::string& line : lines_) std::cerr << line << '\n';
  }

 private:
  std::vector<std::string> lines_;
};

void add_engine_stats(RunReport& report, const EngineStats& s) {
  report.add("queue_insertions", s.enqueued);
  report.add("queue_extractions", s.extractions);
  report.add("peak_queue", s.peak_queue);
  report.add("rc_prev_entries", s.rc_prev_initial);
  report.add("rc_next_elements", s.rc_next_initial);
  report.add("rc_prev_pops", s.rc_prev_pops);
  report.add("rc_next_deletions", s.rc_next_deletions);
}

struct GraphPair {
  Alphabet alphabet;
  FuzzyGraph left;
  FuzzyGraph right;
};

GraphPair load_graphs(const std::string& left, const std::string& right) {
  GraphPair p;
  p.left = parse_graph(read_file(left), p.alphabet);
  p.right = parse_graph(read_file(right), p.alphabet);
  return p;
}

void report_error(const std::string& path, const std::exception& e) {
  std::cerr << "error: " << path << ": " << e.what() << '\n';
}

struct GraphOptions {
  std::string left;
  std::string right;
  bool oracle = false;
  bool verify = false;
  bool stats = false;
};

template <class Engine>
int run_graph_command(const GraphOptions& opt, bool directed) {
  auto t0 = Clock::now();
  GraphPair p;
  try {
    p.left = parse_graph(read_file(opt.left), p.alphabet);
  } catch (const std::exception& e) {
    report_error(opt.left, e);
    return kExitInput;
  }
  try {
    p.right = parse_graph(read_file(opt.right), p.alphabet);
  } catch (const std::exception& e) {
    report_error(opt.right, e);
    return kExitInput;
  }
  double parse_ms = ms_since(t0);

  RunReport report;
  report.add("n", p.left.vertex_count() + p.right.vertex_count());
  report.add("m", p.left.edge_count() + p.right.edge_count());
  report.add("sigma_v", p.alphabet.vertex_labels.size());
  report.add("sigma_e", p.alphabet.edge_labels.size());
  report.add("time_parse_ms", parse_ms);

  auto naive = [&] {
    return directed ? naive_largest_directed_simulation(p.left, p.right)
                    : naive_largest_simulation(p.left, p.right);
  };

  Relation result;
  if (opt.oracle) {
    auto t = Clock::now();
    result = naive();
    report.add("time_oracle_ms", ms_since(t));
  } else {
    Engine engine(p.left, p.right);
    auto t = Clock::now();
    engine.initialize();
    report.add("time_initialize_ms", ms_since(t));
    t = Clock::now();
    result = engine.run();
    report.add("time_main_loop_ms", ms_since(t));
    add_engine_stats(report, engine.stats());
    if (opt.verify) {
      t = Clock::now();
      Relation expected = naive();
      report.add("time_oracle_ms", ms_since(t));
      if (!(expected == result)) {
        std::cerr << "verify: engine and oracle disagree\n"
                  << "engine:\n" << format_relation(result, p.left, p.right)
                  << "oracle:\n" << format_relation(expected, p.left, p.right);
        return kExitMismatch;
      }
    }
  }
  report.add("pairs", result.size());
  std::cout << format_relation(result, p.left, p.right);
  if (opt.stats) report.print();
  return 0;
}

struct CheckOptions {
  std::string relation;
  std::string left;
  std::string right;
  bool directed = false;
};

int run_check(const CheckOptions& opt) {
  GraphPair p;
  Relation z;
  try {
    p = load_graphs(opt.left, opt.right);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  try {
    z = parse_relation(read_file(opt.relation), p.left, p.right);
  } catch (const std::exception& e) {
    report_error(opt.relation, e);
    return kExitInput;
  }
  auto v = opt.directed ? check_directed_simulation(z, p.left, p.right)
                        : check_simulation(z, p.left, p.right);
  if (!v) return 0;
  std::cout << describe(*v, p.left, p.right) << '\n';
  return kExitViolation;
}

struct OracleOptions {
  std::string mode = "sim";
  std::string left;
  std::string right;
  bool worklist = false;
};

int run_oracle(const OracleOptions& opt) {
  GraphPair p;
  try {
    p = load_graphs(opt.left, opt.right);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  bool directed = opt.mode == "dirsim";
  Relation z;
  if (opt.worklist)
    z = directed ? worklist_largest_directed_simulation(p.left, p.right)
                 : worklist_largest_simulation(p.left, p.right);
  else
    z = directed ? naive_largest_directed_simulation(p.left, p.right)
                 : naive_largest_simulation(p.left, p.right);
  std::cout << format_relation(z, p.left, p.right);
  return 0;
}

struct AutomataOptions {
  std::string left;
  std::string right;
  bool oracle = false;
  bool verify = false;
  bool stats = false;
  bool strict = false;
};

std::string describe(const AutomatonViolation& v, const FuzzyAutomaton& a,
                     const FuzzyAutomaton& b, const Alphabet& alphabet) {
  using K = AutomatonViolationKind;
  std::string out = std::string(to_string(v.kind)) + " violation";
  switch (v.kind) {
    case K::kInitial: return out + " at " + a.state_name(v.x);
    case K::kBackwardInitial: return out + " at " + b.state_name(v.x_prime);
    case K::kTerminal:
    case K::kBackwardTerminal:
      return out + " at (" + a.state_name(v.x) + ", " + b.state_name(v.x_prime) + ")";
    case K::kTransition:
      return out + " at (" + a.state_name(v.x) + ", " + b.state_name(v.x_prime) + ", " +
             alphabet.edge_labels.name(v.symbol) + ", " + a.state_name(v.third) + ")";
    case K::kBackwardTransition:
      return out + " at (" + a.state_name(v.x) + ", " + b.state_name(v.x_prime) + ", " +
             alphabet.edge_labels.name(v.symbol) + ", " + b.state_name(v.third) + ")";
  }
  return out;
}

int run_automata_command(const AutomataOptions& opt, bool directed) {
  Alphabet alphabet;
  std::optional<FuzzyAutomaton> a, b;
  auto t0 = Clock::now();
  try {
    a = parse_automaton(read_file(opt.left), alphabet);
  } catch (const std::exception& e) {
    report_error(opt.left, e);
    return kExitInput;
  }
  try {
    b = parse_automaton(read_file(opt.right), alphabet);
  } catch (const std::exception& e) {
    report_error(opt.right, e);
    return kExitInput;
  }
  if (a->alphabet() != b->alphabet()) {
    std::cerr << "error: the automata are over different alphabets\n";
    return kExitInput;
  }
  RunReport report;
  report.add("states", a->state_count() + b->state_count());
  report.add("transitions", a->transitions().size() + b->transitions().size());
  report.add("sigma", a->alphabet().size());
  report.add("time_parse_ms", ms_since(t0));

  AutomataCheckOptions check_opt{directed};
  AutomataSimulationResult result;
  auto t = Clock::now();
  if (opt.oracle) {
    result = naive_largest_automata_simulation(*a, *b, check_opt);
    report.add("time_oracle_ms", ms_since(t));
  } else {
    result = directed ? largest_automata_directed_simulation(*a, *b, alphabet)
                      : largest_automata_simulation(*a, *b, alphabet);
    report.add("time_engine_ms", ms_since(t));
    if (opt.verify) {
      auto expected = naive_largest_automata_simulation(*a, *b, check_opt);
      if (!(expected.relation == result.relation) ||
          expected.initial_satisfied != result.initial_satisfied) {
        std::cerr << "verify: engine and oracle disagree\n";
        return kExitMismatch;
      }
    }
  }
  report.add("pairs", result.relation.size());
  std::cout << format_relation(result.relation, a->state_names(), b->state_names());
  std::cout << "initial: " << (result.initial_satisfied ? "satisfied" : "violated")
            << '\n';
  if (opt.strict) {
    check_opt.strict = true;
    auto v = check_automata_simulation(result.relation, *a, *b, check_opt);
    std::cerr << "strict check: "
              << (v ? describe(*v, *a, *b, alphabet) : std::string("ok")) << '\n';
  }
  if (opt.stats) report.print();
  return 0;
}

struct BenchOptions {
  std::vector<std::size_t> sizes{250, 500, 1000, 2000};
  double density = 5.0;
  std::vector<std::size_t> levels{8};
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::size_t repeat = 1;
  bool per_trial = false;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

struct BenchInstance {
  Alphabet alphabet;
  FuzzyGraph left;
  FuzzyGraph right;
};

// n = |V| + |V'| with n/2 vertices per graph and m ≈ density · n edges split
// evenly; one vertex label and one edge label, degrees from l levels.
BenchInstance bench_instance(std::size_t n, double density, std::size_t levels,
                             std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t{n}, std::uint64_t{levels}};
  Rng rng(seq);
  BenchInstance inst;
  RandomGraphOptions gopt;
  gopt.vertices = n / 2;
  gopt.edges = static_cast<std::size_t>(density * n / 2);
  gopt.levels = levels;
  inst.left = random_graph(gopt, inst.alphabet, rng);
  gopt.vertices = n - n / 2;
  gopt.edges = static_cast<std::size_t>(density * n) - gopt.edges;
  inst.right = random_graph(gopt, inst.alphabet, rng);
  return inst;
}

// One row per (size, levels). Trial t uses the instance of seed + t; times
// are medians over trials in seconds, m and pairs_out describe trial 0.
// With per_trial, every trial gets its own row, led by a trial column.
// Trials are the outer loop so that machine-wide slowdowns spread over all
// rows instead of skewing one of them. With repeat > 1 each engine runs that
// many times on the trial's instance and the fastest run is kept.
int run_bench(const BenchOptions& opt) {
  struct Row {
    std::size_t n, l, m = 0, pairs = 0;
    std::vector<double> sim, dirsim;
    std::vector<std::size_t> trial_m, trial_pairs;
  };
  std::vector<Row> rows;
  for (std::size_t n : opt.sizes)
    for (std::size_t l : opt.levels) rows.push_back({n, l});
  for (std::size_t t = 0; t < opt.trials; ++t)
    for (Row& row : rows) {
      BenchInstance inst = bench_instance(row.n, opt.density, row.l, opt.seed + t);
      std::size_t out = 0;
      double sim = 0, dirsim = 0;
      for (std::size_t k = 0; k < opt.repeat; ++k) {
        auto start = Clock::now();
        out = compute_largest_simulation(inst.left, inst.right).size();
        double a = ms_since(start) / 1000;
        start = Clock::now();
        compute_largest_directed_simulation(inst.left, inst.right);
        double b = ms_since(start) / 1000;
        sim = k == 0 ? a : std::min(sim, a);
        dirsim = k == 0 ? b : std::min(dirsim, b);
      }
      row.sim.push_back(sim);
      row.dirsim.push_back(dirsim);
      row.trial_m.push_back(inst.left.edge_count() + inst.right.edge_count());
      row.trial_pairs.push_back(out);
      if (t == 0) {
        row.m = row.trial_m.back();
        row.pairs = out;
      }
    }
  if (opt.per_trial) {
    std::cout << "trial,n,m,l,time_sim,time_dirsim,pairs_out\n";
    for (std::size_t t = 0; t < opt.trials; ++t)
      for (const Row& row : rows)
        std::printf("%zu,%zu,%zu,%zu,%.6f,%.6f,%zu\n", t, row.n, row.trial_m[t], row.l,
                    row.sim[t], row.dirsim[t], row.trial_pairs[t]);
    return 0;
  }
  std::cout << "n,m,l,time_sim,time_dirsim,pairs_out\n";
  for (const Row& row : rows)
    std::printf("%zu,%zu,%zu,%.6f,%.6f,%zu\n", row.n, row.m, row.l, median(row.sim),
                median(row.dirsim), row.pairs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest crisp simulations between fuzzy labeled graphs"};
  app.require_subcommand(1);

  GraphOptions sim_opt, dirsim_opt;
  for (auto [name, opt, what] :
       {std::tuple{"sim", &sim_opt, "largest simulation"},
        std::tuple{"dirsim", &dirsim_opt, "largest directed simulation"}}) {
    auto* cmd = app.add_subcommand(name, std::string("Compute the ") + what);
    cmd->add_option("left", opt->left, "first graph")->required();
    cmd->add_option("right", opt->right, "second graph")->required();
    cmd->add_flag("--oracle", opt->oracle, "use the naive fixpoint instead");
    cmd->add_flag("--verify", opt->verify, "compare against the naive fixpoint");
    cmd->add_flag("--stats", opt->stats, "print a run report to stderr");
  }

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Check whether a relation is a simulation");
  check->add_option("relation", check_opt.relation, "relation file")->required();
  check->add_option("left", check_opt.left, "first graph")->required();
  check->add_option("right", check_opt.right, "second graph")->required();
  check->add_flag("--directed", check_opt.directed, "check directed simulation");

  AutomataOptions fa_sim_opt, fa_dirsim_opt;
  for (auto [name, opt, what] :
       {std::tuple{"fa-sim", &fa_sim_opt, "largest simulation"},
        std::tuple{"fa-dirsim", &fa_dirsim_opt, "largest directed simulation"}}) {
    auto* cmd = app.add_subcommand(name, std::string("Compute the ") + what +
                                             " between fuzzy automata");
    cmd->add_option("left", opt->left, "first automaton")->required();
    cmd->add_option("right", opt->right, "second automaton")->required();
    cmd->add_flag("--oracle", opt->oracle, "use the automaton-level fixpoint");
    cmd->add_flag("--verify", opt->verify, "compare against the automaton-level fixpoint");
    cmd->add_flag("--stats", opt->stats, "print a run report to stderr");
    cmd->add_flag("--strict-automata", opt->strict,
                  "also check the result with strict inequalities");
  }

  OracleOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle", "Run a reference implementation");
  oracle->add_option("mode", oracle_opt.mode, "sim or dirsim")
      ->required()
      ->check(CLI::IsMember({"sim", "dirsim"}));
  oracle->add_option("left", oracle_opt.left, "first graph")->required();
  oracle->add_option("right", oracle_opt.right, "second graph")->required();
  oracle->add_flag("--worklist", oracle_opt.worklist,
                   "use the abstract worklist algorithm instead of the naive fixpoint");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Time both engines on random graphs (CSV)");
  bench->add_option("--sizes", bench_opt.sizes, "values of n = |V| + |V'|")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--density", bench_opt.density, "m / n")->check(CLI::PositiveNumber);
  bench->add_option("--degree-levels", bench_opt.levels, "numbers of degree levels")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "generator seed");
  bench->add_option("--trials", bench_opt.trials, "seeded instances per row (median time)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--repeat", bench_opt.repeat, "timed runs per trial (fastest kept)")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--per-trial", bench_opt.per_trial, "one row per trial instead of medians");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  if (app.got_subcommand("sim")) return run_graph_command<SimulationEngine>(sim_opt, false);
  if (app.got_subcommand("dirsim"))
    return run_graph_command<DirectedSimulationEngine>(dirsim_opt, true);
  if (app.got_subcommand("check")) return run_check(check_opt);
  if (app.got_subcommand("fa-sim")) return run_automata_command(fa_sim_opt, false);
  if (app.got_subcommand("fa-dirsim")) return run_automata_command(fa_dirsim_opt, true);
  if (app.got_subcommand("oracle")) return run_oracle(oracle_opt);
  return run_bench(bench_opt);
}
