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

#include <random>
#include <thread>

#include "support.hpp"
#include "symsub/errors.hpp"
#include "symsub/generators.hpp"
#include "symsub/oracle.hpp"

namespace symsub {
namespace {

using testing::Complete;
using testing::Cut;
using testing::Mask;

TEST(Eval, TriangleCut) {
  ValueOracle k3(Cut(Complete(3)));
  EXPECT_EQ(k3.eval(IdList{0}), 2.0);
  EXPECT_EQ(k3.eval(IdList{}), 0.0);
  EXPECT_EQ(k3.eval(IdList{0, 1, 2}), 0.0);
}

TEST(Eval, HyperedgeCut) {
  ValueOracle h(std::make_shared<HypergraphCutFunction>(WeightedHypergraph{4, {{{0, 1, 2}, 5.0}}}));
  EXPECT_EQ(h.eval(IdList{0}), 5.0);
  EXPECT_EQ(h.eval(IdList{0, 1, 2}), 0.0);
  EXPECT_EQ(h.eval(IdList{3}), 0.0);
}

TEST(Eval, TableIndexing) {
  ValueOracle t(std::make_shared<TableFunction>(2, std::vector<double>{0, 5, 4, 0}));
  EXPECT_EQ(t.eval(IdList{0}), 5.0);
  EXPECT_EQ(t.eval(IdList{1}), 4.0);
  EXPECT_EQ(t.eval(IdList{0, 1}), 0.0);
}

TEST(Eval, RejectsOutOfRangeIds) {
  ValueOracle k3(Cut(Complete(3)));
  EXPECT_THROW(k3.eval(IdList{3}), InvalidSetError);
  EXPECT_THROW(k3.eval(Subset(4)), InvalidSetError);
}

TEST(Eval, MalformedPayloads) {
  EXPECT_THROW(TableFunction(2, {0, 1, 2}), MalformedInstanceError);
  EXPECT_THROW(GraphCutFunction(WeightedGraph{2, {{0, 0, 1.0}}}), MalformedInstanceError);
  EXPECT_THROW(GraphCutFunction(WeightedGraph{2, {{0, 2, 1.0}}}), MalformedInstanceError);
  EXPECT_THROW(GraphCutFunction(WeightedGraph{2, {{0, 1, -1.0}}}), MalformedInstanceError);
  EXPECT_THROW(HypergraphCutFunction(WeightedHypergraph{3, {{{0}, 1.0}}}), MalformedInstanceError);
}

TEST(Marginal, Examples) {
  ValueOracle k3(Cut(Complete(3)));
  const Subset s0 = Subset::FromIds(3, IdList{0});
  EXPECT_EQ(Marginal(k3, 1, s0, 2.0), 0.0);
  EXPECT_EQ(Marginal(k3, 0, Subset(3), 0.0), 2.0);
  EXPECT_EQ(k3.query_count(), 2U);
  EXPECT_THROW(Marginal(k3, 0, s0, 2.0), InvalidArgumentError);
}

TEST(QueryCount, CountsAndResets) {
  ValueOracle k3(Cut(Complete(3)));
  EXPECT_EQ(k3.query_count(), 0U);
  for (int i = 0; i < 3; ++i) k3.eval(IdList{i});
  EXPECT_EQ(k3.query_count(), 3U);
  k3.reset_queries();
  EXPECT_EQ(k3.query_count(), 0U);
  ValueOracle other = k3.fresh_context();
  other.eval(IdList{});
  EXPECT_EQ(k3.query_count(), 0U);
  EXPECT_EQ(other.query_count(), 1U);
}

TEST(QueryCount, ConcurrentIncrementsAreNotLost) {
  ValueOracle k3(Cut(Complete(3)));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&k3] {
      for (int i = 0; i < 1000; ++i) k3.eval(IdList{0});
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(k3.query_count(), 4000U);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(ValidateExhaustive(TableFunction(2, {0, 5, 5, 0})).valid());

  const ValidationReport bad = ValidateExhaustive(TableFunction(2, {0, 5, 4, 0}));
  ASSERT_FALSE(bad.valid());
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_EQ(bad.violations.front().kind, ViolationKind::kAsymmetric);
  EXPECT_EQ(bad.violations.front().s, IdList{0});

  std::mt19937_64 rng(3);
  const WeightedGraph g = testing::RandomTestGraph(rng, 9, 0.5, 0.0, 2.0);
  EXPECT_TRUE(ValidateExhaustive(GraphCutFunction(g)).valid());
  EXPECT_TRUE(ValidateSampled(GraphCutFunction(g), 500, 1).valid());
}

TEST(Validate, DetectsNegativityAndNonSubmodularity) {
  // Supermodular and symmetric: f = 1 on {0,1} and on its complement.
  const ValidationReport r = ValidateExhaustive(TableFunction(3, {0, 0, 0, 1, 1, 0, 0, 0}));
  bool saw_submodularity = false;
  for (const Violation& v : r.violations) {
    saw_submodularity |= v.kind == ViolationKind::kNotSubmodular;
  }
  EXPECT_TRUE(saw_submodularity);
  EXPECT_FALSE(ValidateExhaustive(TableFunction(1, {-1, -1})).valid());
  EXPECT_FALSE(ValidateSampled(TableFunction(3, {0, 0, 0, 1, 1, 0, 0, 0}), 2000, 5).valid());
}

TEST(Validate, ExhaustiveCap) {
  EXPECT_THROW(ValidateExhaustive(GraphCutFunction(WeightedGraph{21, {}})),
               InvalidParameterError);
}

TEST(Properties, SymmetryExhaustiveForAllKinds) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 12; ++n) {
    const WeightedGraph g = testing::RandomTestGraph(rng, n, 0.6, 0.0, 3.0);
    const GraphCutFunction gf(g);
    const WeightedHypergraph h =
        n >= 2 ? RandomHypergraph(n, 2 * n, std::min(n, 4), {0.0, 2.0}, n) : WeightedHypergraph{n, {}};
    const HypergraphCutFunction hf(h);
    const Mask full = (Mask{1} << n) - 1;
    for (Mask m = 0; m <= full; ++m) {
      const Subset s = Subset::FromMask(n, m);
      const Subset c = Subset::FromMask(n, full & ~m);
      ASSERT_EQ(gf.value(s), gf.value(c));
      ASSERT_EQ(hf.value(s), hf.value(c));
    }
  }
}

TEST(Properties, DiminishingReturnsExhaustive) {
  std::mt19937_64 rng(12);
  const int n = 10;
  const WeightedGraph g = testing::RandomTestGraph(rng, n, 0.5, 0.0, 1.0);
  const WeightedHypergraph h = RandomHypergraph(n, 15, 4, {0.0, 1.0}, 12);
  for (const auto& f : std::vector<std::shared_ptr<const SetFunction>>{
           Cut(g), std::make_shared<HypergraphCutFunction>(h)}) {
    std::vector<double> table(std::size_t{1} << n);
    for (Mask m = 0; m < table.size(); ++m) table[m] = f->value(Subset::FromMask(n, m));
    for (Mask t = 0; t < table.size(); ++t) {
      for (Mask s = t;; s = (s - 1) & t) {
        for (int u = 0; u < n; ++u) {
          if (testing::Has(t, u)) continue;
          const Mask bit = Mask{1} << u;
          ASSERT_GE(table[s | bit] - table[s] + kCheckTolerance, table[t | bit] - table[t]);
        }
        if (s == 0) break;
      }
    }
  }
}

TEST(Properties, GraphCutMatchesEdgeRecount) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const WeightedGraph g = testing::RandomTestGraph(rng, n, 0.4, 0.0, 5.0);
    const Mask m = rng() & ((n == 64 ? ~Mask{0} : (Mask{1} << n) - 1));
    const GraphCutFunction f(g);
    ASSERT_NEAR(f.value(Subset::FromMask(n, m)), testing::RecountCut(g, m), 1e-12);
  }
}

TEST(Properties, HypergraphCutMatchesRecount) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const WeightedHypergraph h = RandomHypergraph(n, 10, std::min(n, 5), {0.0, 2.0}, trial);
    const Mask m = rng() & ((Mask{1} << n) - 1);
    const HypergraphCutFunction f(h);
    ASSERT_NEAR(f.value(Subset::FromMask(n, m)), testing::RecountHyperCut(h, m), 1e-12);
  }
}

TEST(Subset, RoundTripsAndBounds) {
  const Subset s = Subset::FromIds(70, IdList{0, 5, 64, 69});
  EXPECT_EQ(s.ids(), (IdList{0, 5, 64, 69}));
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.complement().size(), 66);
  EXPECT_TRUE(s.is_subset_of(Subset::Full(70)));
  EXPECT_THROW(Subset::FromIds(3, IdList{3}), InvalidSetError);
  EXPECT_THROW(Subset::FromIds(3, IdList{-1}), InvalidSetError);
  EXPECT_EQ(MaskToIds(0b1011), (IdList{0, 1, 3}));
}

}  // namespace
}  // namespace symsub
