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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace fuzzysim {
namespace {

using testing::data_path;
using testing::run_cli;
using testing::TempDir;

std::string pair_args(const std::string& left, const std::string& right) {
  return data_path(left) + " " + data_path(right);
}

std::string example21_args() { return pair_args("example21_g.txt", "example21_h.txt"); }
std::string example23_args() { return pair_args("example23_g.txt", "example23_h.txt"); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the time_sim and time_dirsim columns of bench CSV output.
std::string without_times(const std::string& csv) {
  std::string out;
  for (const std::string& line : lines(csv)) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (i != 3 && i != 4) out += cells[i] + ",";
    out += "\n";
  }
  return out;
}

TEST(Cli, SimExample21) {
  auto r = run_cli("sim " + example21_args());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "b e\nc e\nd f\n");
}

TEST(Cli, DirsimExample21IsEmpty) {
  auto r = run_cli("dirsim " + example21_args());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, DirsimExample23) {
  auto r = run_cli("dirsim " + example23_args());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "b e\nb f\nc e\nc f\nd e\nd f\n");
}

TEST(Cli, OracleAndVerifyAgree) {
  for (const char* cmd : {"sim", "dirsim"}) {
    auto engine = run_cli(std::string(cmd) + " " + example23_args());
    auto oracle = run_cli(std::string(cmd) + " --oracle " + example23_args());
    auto verify = run_cli(std::string(cmd) + " --verify " + example23_args());
    EXPECT_EQ(engine.out, oracle.out);
    EXPECT_EQ(verify.exit_code, 0);
    EXPECT_EQ(verify.out, engine.out);
  }
  auto naive = run_cli("oracle sim " + example21_args());
  auto worklist = run_cli("oracle sim --worklist " + example21_args());
  EXPECT_EQ(naive.out, "b e\nc e\nd f\n");
  EXPECT_EQ(worklist.out, naive.out);
  EXPECT_EQ(run_cli("oracle dirsim --worklist " + example21_args()).out, "");
}

TEST(Cli, StatsGoToStderr) {
  auto r = run_cli("sim --stats " + example21_args());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "b e\nc e\nd f\n");
  auto report = lines(r.err);
  EXPECT_NE(std::find(report.begin(), report.end(), "n=6"), report.end());
  EXPECT_NE(std::find(report.begin(), report.end(), "m=8"), report.end());
  EXPECT_NE(std::find(report.begin(), report.end(), "pairs=3"), report.end());
}

TEST(Cli, MalformedDegree) {
  TempDir dir;
  std::string bad = dir.write("bad.txt", "label a p 0.5\nedge a r a 1.5\n");
  auto r = run_cli("sim " + bad + " " + data_path("example21_h.txt"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, MissingFileAndBadUsage) {
  EXPECT_EQ(run_cli("sim /nonexistent/g.txt " + data_path("example21_h.txt")).exit_code, 2);
  EXPECT_EQ(run_cli("sim").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST(Cli, CheckGivenRelation) {
  auto r = run_cli("check " + data_path("example21_z0.txt") + " " + example21_args());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, CheckLabelViolation) {
  TempDir dir;
  std::string z = dir.write("z.txt", "d e\n");
  auto r = run_cli("check " + z + " " + example21_args());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "label violation at (d, e)\n");
}

TEST(Cli, CheckDirectedBackwardViolation) {
  TempDir dir;
  std::string z = dir.write("z.txt", "c e\n");
  auto r = run_cli("check --directed " + z + " " + example21_args());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out.rfind("backward violation at (c, e, e)", 0), 0u) << r.out;
}

TEST(Cli, CheckEmptyRelation) {
  TempDir dir;
  std::string z = dir.write("z.txt", "");
  EXPECT_EQ(run_cli("check " + z + " " + example21_args()).exit_code, 0);
  EXPECT_EQ(run_cli("check --directed " + z + " " + example21_args()).exit_code, 0);
}

TEST(Cli, CheckUnknownVertex) {
  TempDir dir;
  std::string z = dir.write("z.txt", "b nowhere\n");
  auto r = run_cli("check " + z + " " + example21_args());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, OutputIndependentOfLineOrder) {
  TempDir dir;
  auto g = lines(read_file(data_path("example23_g.txt")));
  std::reverse(g.begin(), g.end());
  std::string text;
  for (const std::string& line : g) text += line + "\n";
  std::string reversed = dir.write("g.txt", text);
  for (const char* cmd : {"sim", "dirsim"}) {
    auto a = run_cli(std::string(cmd) + " " + example23_args());
    auto b = run_cli(std::string(cmd) + " " + reversed + " " + data_path("example23_h.txt"));
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, VerifyOnRandomInstances) {
  TempDir dir;
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    auto p = testing::random_pair(rng, 12, 4, 2, 2);
    std::string g = dir.write("g.txt", format_graph(p.g, p.alphabet));
    std::string h = dir.write("h.txt", format_graph(p.h, p.alphabet));
    ASSERT_EQ(run_cli("sim --verify " + g + " " + h).exit_code, 0) << "case " << i;
    ASSERT_EQ(run_cli("dirsim --verify " + g + " " + h).exit_code, 0) << "case " << i;
  }
}

TEST(Cli, FaSimAgainstItself) {
  std::string a = data_path("automaton_small.txt");
  auto r = run_cli("fa-sim " + a + " " + a);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "q0 q0\nq1 q1\ninitial: satisfied\n");
  EXPECT_EQ(run_cli("fa-sim --oracle " + a + " " + a).out, r.out);
  EXPECT_EQ(run_cli("fa-sim --verify " + a + " " + a).exit_code, 0);
  auto d = run_cli("fa-dirsim " + a + " " + a);
  EXPECT_EQ(d.exit_code, 0);
  EXPECT_EQ(d.out, r.out);
}

TEST(Cli, FaInitialViolated) {
  TempDir dir;
  std::string a = dir.write("a.txt", "initial x 0.8\n");
  std::string b = dir.write("b.txt", "initial y 0.5\n");
  auto r = run_cli("fa-sim " + a + " " + b);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "x y\ninitial: violated\n");
}

TEST(Cli, FaAlphabetMismatch) {
  auto r = run_cli("fa-sim " + pair_args("automaton_small.txt", "automaton_other_alphabet.txt"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, BenchIsSeeded) {
  auto a = run_cli("bench --sizes 100 --seed 7");
  auto b = run_cli("bench --sizes 100 --seed 7");
  ASSERT_EQ(a.exit_code, 0);
  auto rows = lines(a.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "n,m,l,time_sim,time_dirsim,pairs_out");
  EXPECT_EQ(rows[1].rfind("100,500,", 0), 0u) << rows[1];
  EXPECT_EQ(without_times(a.out), without_times(b.out));
  EXPECT_EQ(run_cli("bench --sizes 0").exit_code, 2);
}

}  // namespace
}  // namespace fuzzysim
