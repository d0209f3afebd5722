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

#include <set>
#include <vector>

#include "test_support.hpp"

namespace fuzzysim {
namespace {

using testing::example21;
using testing::example23;
using testing::named;
using testing::random_pair;
using testing::vertex;

TEST(CheckSimulation, Example21GivenRelation) {
  auto p = example21();
  Relation z0 = named(p.g, p.h, {{"b", "e"}, {"c", "e"}, {"d", "f"}});
  EXPECT_EQ(check_simulation(z0, p.g, p.h), std::nullopt);
}

TEST(CheckSimulation, EmptyRelationIsSimulation) {
  auto p = example21();
  Relation empty(p.g.vertex_count(), p.h.vertex_count());
  EXPECT_EQ(check_simulation(empty, p.g, p.h), std::nullopt);
  EXPECT_EQ(check_directed_simulation(empty, p.g, p.h), std::nullopt);
}

TEST(CheckSimulation, LabelViolation) {
  auto p = example21();
  auto v = check_simulation(named(p.g, p.h, {{"d", "e"}}), p.g, p.h);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ViolationKind::kLabel);
  EXPECT_EQ(v->x, vertex(p.g, "d"));
  EXPECT_EQ(v->x_prime, vertex(p.h, "e"));
}

TEST(CheckSimulation, ForwardViolationWitness) {
  auto p = example21();
  auto v = check_simulation(named(p.g, p.h, {{"a", "e"}}), p.g, p.h);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ViolationKind::kForward);
  EXPECT_EQ(v->x, vertex(p.g, "a"));
  EXPECT_EQ(v->x_prime, vertex(p.h, "e"));
  EXPECT_EQ(v->third, vertex(p.g, "b"));
}

TEST(CheckDirected, BackwardViolationWitness) {
  auto p = example21();
  auto v = check_directed_simulation(named(p.g, p.h, {{"c", "e"}}), p.g, p.h);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ViolationKind::kBackward);
  EXPECT_EQ(v->x, vertex(p.g, "c"));
  EXPECT_EQ(v->x_prime, vertex(p.h, "e"));
  EXPECT_EQ(v->third, vertex(p.h, "e"));
}

TEST(CheckDirected, Example21GivenRelationIsNotDirected) {
  auto p = example21();
  Relation z0 = named(p.g, p.h, {{"b", "e"}, {"c", "e"}, {"d", "f"}});
  EXPECT_TRUE(check_directed_simulation(z0, p.g, p.h).has_value());
}

TEST(CheckDirected, Example23) {
  auto p = example23();
  Relation z = named(p.g, p.h,
                     {{"b", "e"}, {"b", "f"}, {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}});
  EXPECT_EQ(check_simulation(z, p.g, p.h), std::nullopt);
  EXPECT_EQ(check_directed_simulation(z, p.g, p.h), std::nullopt);
}

TEST(NaiveOracle, Example21) {
  auto p = example21();
  EXPECT_EQ(naive_largest_simulation(p.g, p.h),
            named(p.g, p.h, {{"b", "e"}, {"c", "e"}, {"d", "f"}}));
  EXPECT_TRUE(naive_largest_directed_simulation(p.g, p.h).empty());
}

TEST(NaiveOracle, Example23) {
  auto p = example23();
  Relation expected = named(
      p.g, p.h, {{"b", "e"}, {"b", "f"}, {"c", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}});
  EXPECT_EQ(naive_largest_simulation(p.g, p.h), expected);
  EXPECT_EQ(naive_largest_directed_simulation(p.g, p.h), expected);
}

TEST(NaiveOracle, EdgelessGraphsKeepLabelCompatiblePairs) {
  Alphabet a;
  FuzzyGraph g = parse_graph("label u p 0.5\nlabel v p 0.9\n", a);
  FuzzyGraph h = parse_graph("label w p 0.7\n", a);
  Relation expected = named(g, h, {{"u", "w"}});
  EXPECT_EQ(naive_largest_simulation(g, h), expected);
  EXPECT_EQ(naive_largest_directed_simulation(g, h), expected);
}

TEST(WorklistOracle, Example31StateBeforeMainLoop) {
  auto p = example21();
  Relation z, pending;
  WorklistOptions opt;
  opt.before_main_loop = [&](const Relation& zz, const Relation& pp) {
    z = zz;
    pending = pp;
  };
  Relation result = WorklistOracle(p.g, p.h, false, opt).run().relation;
  EXPECT_EQ(z, named(p.g, p.h, {{"a", "e"}, {"b", "e"}, {"c", "e"}, {"d", "f"}}));
  EXPECT_EQ(pending, named(p.g, p.h, {{"a", "f"}, {"b", "f"}, {"c", "f"}}));
  EXPECT_EQ(result, named(p.g, p.h, {{"b", "e"}, {"c", "e"}, {"d", "f"}}));
}

TEST(WorklistOracle, Example41StateBeforeMainLoop) {
  auto p = example21();
  Relation z, pending;
  WorklistOptions opt;
  opt.before_main_loop = [&](const Relation& zz, const Relation& pp) {
    z = zz;
    pending = pp;
  };
  Relation result = WorklistOracle(p.g, p.h, true, opt).run().relation;
  EXPECT_EQ(z, named(p.g, p.h, {{"a", "e"}, {"b", "e"}, {"d", "f"}}));
  EXPECT_EQ(pending, named(p.g, p.h, {{"a", "f"}, {"b", "f"}, {"c", "f"}, {"c", "e"}}));
  EXPECT_TRUE(result.empty());
}

TEST(WorklistOracle, Example23) {
  auto p = example23();
  EXPECT_EQ(worklist_largest_simulation(p.g, p.h), naive_largest_simulation(p.g, p.h));
  EXPECT_EQ(worklist_largest_directed_simulation(p.g, p.h),
            naive_largest_directed_simulation(p.g, p.h));
}

// Random pairs small enough for the naive fixpoint and for exhaustive
// maximality checks.
class OracleProperties : public ::testing::TestWithParam<bool> {};

TEST_P(OracleProperties, WorklistMatchesNaive) {
  bool directed = GetParam();
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    auto p = random_pair(rng, 6, 5, 2, 2);
    Relation naive = directed ? naive_largest_directed_simulation(p.g, p.h)
                              : naive_largest_simulation(p.g, p.h);
    WorklistOptions fifo, lifo;
    lifo.discipline = QueueDiscipline::kLifo;
    auto a = WorklistOracle(p.g, p.h, directed, fifo).run();
    auto b = WorklistOracle(p.g, p.h, directed, lifo).run();
    ASSERT_EQ(a.relation, naive) << "case " << i;
    ASSERT_EQ(b.relation, naive) << "case " << i;
    EXPECT_LE(a.insertions, p.g.vertex_count() * p.h.vertex_count());
    EXPECT_EQ(a.insertions, a.extractions);
  }
}

TEST_P(OracleProperties, ResultIsLargest) {
  bool directed = GetParam();
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    auto p = random_pair(rng, 5, 4, 2, 1);
    Relation z = directed ? naive_largest_directed_simulation(p.g, p.h)
                          : naive_largest_simulation(p.g, p.h);
    auto check = [&](const Relation& r) {
      return directed ? check_directed_simulation(r, p.g, p.h) : check_simulation(r, p.g, p.h);
    };
    ASSERT_EQ(check(z), std::nullopt) << "case " << i;
    for (VertexId x = 0; x < p.g.vertex_count(); ++x)
      for (VertexId x2 = 0; x2 < p.h.vertex_count(); ++x2) {
        if (z.contains(x, x2)) continue;
        Relation bigger = z;
        bigger.insert(x, x2);
        ASSERT_TRUE(check(bigger).has_value()) << "case " << i;
      }
  }
}

TEST_P(OracleProperties, SupportInvariantHoldsAtEveryExtraction) {
  bool directed = GetParam();
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    auto p = random_pair(rng, 5, 4, 1, 2);
    Relation largest = directed ? naive_largest_directed_simulation(p.g, p.h)
                                : naive_largest_simulation(p.g, p.h);
    bool ok = true;
    WorklistOptions opt;
    auto inspect = [&](const Relation& z, const Relation& pending) {
      ok = ok && largest.is_subset_of(z) &&
           worklist_support_invariant_holds(p.g, p.h, z, pending, directed);
    };
    opt.before_main_loop = inspect;
    // Checked as of the loop head, where the extracted pair is still pending.
    opt.on_extract = [&](VertexPair e, const Relation& z, const Relation& pending) {
      Relation head = pending;
      head.insert(e.first, e.second);
      inspect(z, head);
    };
    WorklistOracle(p.g, p.h, directed, opt).run();
    ASSERT_TRUE(ok) << "case " << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, OracleProperties, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "Directed" : "Plain"; });

TEST(OracleProperties, DirectedIsContainedInPlain) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    auto p = random_pair(rng, 6, 5);
    EXPECT_TRUE(naive_largest_directed_simulation(p.g, p.h)
                    .is_subset_of(naive_largest_simulation(p.g, p.h)));
  }
}

TEST(OracleProperties, SelfSimulationIsPreorder) {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    auto p = random_pair(rng, 6, 4, 2, 2);
    for (bool directed : {false, true}) {
      Relation z = directed ? naive_largest_directed_simulation(p.g, p.g)
                            : naive_largest_simulation(p.g, p.g);
      EXPECT_TRUE(Relation::identity(p.g.vertex_count()).is_subset_of(z));
      EXPECT_TRUE(compose(z, z).is_subset_of(z));
    }
  }
}

TEST(OracleProperties, CompositionIsContained) {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    auto p = random_pair(rng, 5, 4);
    RandomGraphOptions opt;
    opt.vertices = 1 + i % 5;
    opt.edges = opt.vertices * 2;
    opt.levels = 4;
    FuzzyGraph k = random_graph(opt, p.alphabet, rng);
    for (bool directed : {false, true}) {
      auto largest = [&](const FuzzyGraph& a, const FuzzyGraph& b) {
        return directed ? naive_largest_directed_simulation(a, b)
                        : naive_largest_simulation(a, b);
      };
      EXPECT_TRUE(compose(largest(p.g, p.h), largest(p.h, k)).is_subset_of(largest(p.g, k)));
    }
  }
}

TEST(OracleProperties, InvariantUnderVertexRenaming) {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    auto p = random_pair(rng, 6, 4);
    auto perm = random_permutation(p.g.vertex_count(), rng);
    FuzzyGraph g2 = permute_vertices(p.g, perm);
    Relation a = naive_largest_simulation(p.g, p.h);
    Relation b = naive_largest_simulation(g2, p.h);
    for (auto [x, x2] : a.pairs()) EXPECT_TRUE(b.contains(perm[x], x2));
    EXPECT_EQ(a.size(), b.size());
  }
}

}  // namespace
}  // namespace fuzzysim
