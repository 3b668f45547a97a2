// Copyright 2026 The Authors.
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

#include <cmath>
#include <set>

#include "support.hpp"
#include "symsub/algorithms.hpp"
#include "symsub/errors.hpp"
#include "symsub/exact.hpp"
#include "symsub/generators.hpp"

namespace symsub {
namespace {

using testing::Mask;

double EdgeWeight(const WeightedGraph& g, int a, int b) {
  for (const WeightedEdge& e : g.edges) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.w;
  }
  return -1.0;
}

TEST(TightExample, KThreeLayout) {
  const TightExample ex = MakeTightExample(3);
  EXPECT_EQ(ex.c, 5);
  EXPECT_EQ(ex.graph.n, 21);
  EXPECT_EQ(ex.u_ids, (IdList{0, 1, 2}));
  EXPECT_EQ(ex.o_ids, (IdList{3, 4, 5}));
  EXPECT_EQ(ex.v_ids.size(), 15U);
  for (int o : ex.o_ids) {
    EXPECT_NEAR(EdgeWeight(ex.graph, o, 0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(EdgeWeight(ex.graph, o, 1), 1.0 / 9.0, 1e-15);
    EXPECT_NEAR(EdgeWeight(ex.graph, o, 2), 1.0 / 27.0, 1e-15);
  }
  // o_1 is adjacent to v_{1,1..5}, ids 6..10.
  for (int v = 6; v <= 10; ++v) EXPECT_NEAR(EdgeWeight(ex.graph, 3, v), 14.0 / 135.0, 1e-15);
  EXPECT_LT(EdgeWeight(ex.graph, 3, 11), 0.0);
  for (int o : ex.o_ids) {
    EXPECT_NEAR(testing::RecountCut(ex.graph, Mask{1} << o), 1.0, 1e-12);
  }
}

TEST(TightExample, CFormula) {
  EXPECT_EQ(TightExampleC(3), 5);
  EXPECT_EQ(TightExampleC(4), 5);
  for (int k = 3; k <= 12; ++k) {
    const double q = 1.0 - 2.0 / k;
    const double x = (1.0 + std::pow(q, k)) / (2.0 * std::pow(q, k - 1));
    EXPECT_GE(TightExampleC(k), x - 1e-9);
    EXPECT_LT(TightExampleC(k) - 1, x);
    EXPECT_EQ(MakeTightExample(k).graph.n, 2 * k + TightExampleC(k) * k);
  }
}

TEST(TightExample, RejectsSmallK) {
  EXPECT_THROW(MakeTightExample(2), InvalidParameterError);
}

TEST(TightExample, BruteForceAtThree) {
  const TightExample ex = MakeTightExample(3);
  const ExactResult r = BruteForceOpt(GraphCutFunction(ex.graph), CardinalityConstraint{3});
  EXPECT_NEAR(r.opt_value, 3.0, 1e-12);
  EXPECT_EQ(r.witness, ex.o_ids);
}

TEST(TightExample, AnalyticOptimumAtFour) {
  // f(O) = k because every edge has exactly one endpoint in O.
  const TightExample ex = MakeTightExample(4);
  const std::set<int> o(ex.o_ids.begin(), ex.o_ids.end());
  for (const WeightedEdge& e : ex.graph.edges) {
    ASSERT_NE(o.count(e.u) == 1, o.count(e.v) == 1);
  }
  EXPECT_NEAR(testing::RecountCut(ex.graph, testing::ToMask(ex.o_ids)), 4.0, 1e-12);
  EXPECT_EQ(ex.optimal_value, 4.0);
}

TEST(TightExample, GreedyValueForManyK) {
  for (int k = 3; k <= 10; ++k) {
    const TightExample ex = MakeTightExample(k);
    ValueOracle oracle(testing::Cut(ex.graph));
    const RunTrace t = GreedyCardinality(oracle, k);
    const double expected = 0.5 * k * (1.0 - std::pow(1.0 - 2.0 / k, k));
    EXPECT_NEAR(t.final_value, expected, 1e-9) << "k = " << k;
    EXPECT_NEAR(ex.greedy_value, expected, 1e-12);
  }
}

TEST(RandomGraph, Examples) {
  const WeightedGraph k3 = RandomGraph(3, 1.0, {1.0, 1.0}, 5);
  EXPECT_EQ(k3, testing::Complete(3));
  EXPECT_TRUE(RandomGraph(8, 0.0, {0.0, 1.0}, 5).edges.empty());
  EXPECT_EQ(RandomGraph(12, 0.4, {0.0, 2.0}, 77), RandomGraph(12, 0.4, {0.0, 2.0}, 77));
  EXPECT_NE(RandomGraph(12, 0.4, {0.0, 2.0}, 77), RandomGraph(12, 0.4, {0.0, 2.0}, 78));
  EXPECT_THROW(RandomGraph(0, 0.5, {0.0, 1.0}, 1), InvalidParameterError);
  EXPECT_THROW(RandomGraph(3, 1.5, {0.0, 1.0}, 1), InvalidParameterError);
  EXPECT_THROW(RandomGraph(3, 0.5, {2.0, 1.0}, 1), InvalidParameterError);
  for (const WeightedEdge& e : RandomGraph(10, 0.5, {0.5, 2.0}, 9).edges) {
    EXPECT_GE(e.w, 0.5);
    EXPECT_LE(e.w, 2.0);
  }
}

TEST(RandomHypergraph, Examples) {
  EXPECT_TRUE(RandomHypergraph(5, 0, 3, {0.0, 1.0}, 1).hyperedges.empty());
  for (const Hyperedge& e : RandomHypergraph(6, 20, 2, {0.0, 1.0}, 2).hyperedges) {
    EXPECT_EQ(e.members.size(), 2U);
  }
  EXPECT_EQ(RandomHypergraph(9, 12, 4, {0.0, 1.0}, 3), RandomHypergraph(9, 12, 4, {0.0, 1.0}, 3));
  for (const Hyperedge& e : RandomHypergraph(9, 50, 4, {0.0, 1.0}, 4).hyperedges) {
    EXPECT_GE(e.members.size(), 2U);
    EXPECT_LE(e.members.size(), 4U);
    EXPECT_GE(e.w, 0.0);
  }
  EXPECT_THROW(RandomHypergraph(3, 2, 4, {0.0, 1.0}, 1), InvalidParameterError);
  EXPECT_THROW(RandomHypergraph(3, 2, 1, {0.0, 1.0}, 1), InvalidParameterError);
}

TEST(Generated, PassExhaustiveValidation) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(ValidateExhaustive(GraphCutFunction(RandomGraph(12, 0.5, {0.0, 3.0}, seed))).valid());
    EXPECT_TRUE(ValidateExhaustive(
                    HypergraphCutFunction(RandomHypergraph(12, 20, 5, {0.0, 3.0}, seed)))
                    .valid());
  }
}

}  // namespace
}  // namespace symsub
