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

#include "symsub/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symsub/errors.hpp"
#include "symsub/rng.hpp"

namespace symsub {

namespace {

void CheckRange(WeightRange weights) {
  if (!(weights.lo >= 0.0 && weights.lo <= weights.hi) || !std::isfinite(weights.hi)) {
    throw InvalidParameterError("weight range must satisfy 0 <= lo <= hi");
  }
}

double DrawWeight(Rng& rng, WeightRange weights) {
  return weights.lo + (weights.hi - weights.lo) * rng.uniform01();
}

}  // namespace

int TightExampleC(int k) {
  if (k < 3) throw InvalidParameterError("tight example needs k >= 3");
  const double q = 1.0 - 2.0 / k;
  const double ratio = (1.0 + std::pow(q, k)) / (2.0 * std::pow(q, k - 1));
  // The slack absorbs rounding when the ratio is an exact integer.
  return static_cast<int>(std::ceil(ratio - 1e-12));
}

TightExample MakeTightExample(int k) {
  const int c = TightExampleC(k);
  const double q = 1.0 - 2.0 / k;
  TightExample ex;
  ex.k = k;
  ex.c = c;
  ex.graph.n = 2 * k + c * k;
  for (int j = 0; j < k; ++j) ex.u_ids.push_back(j);
  for (int i = 0; i < k; ++i) ex.o_ids.push_back(k + i);
  for (int i = 0; i < k * c; ++i) ex.v_ids.push_back(2 * k + i);

  const double v_weight = (1.0 + std::pow(q, k)) / (2.0 * c);
  for (int i = 0; i < k; ++i) {
    const ElementId o = ex.o_ids[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) {
      ex.graph.edges.push_back({o, ex.u_ids[static_cast<std::size_t>(j)], std::pow(q, j) / k});
    }
    for (int j = 0; j < c; ++j) {
      ex.graph.edges.push_back({o, 2 * k + i * c + j, v_weight});
    }
  }
  ex.optimal_value = k;
  ex.greedy_value = 0.5 * k * (1.0 - std::pow(q, k));
  return ex;
}

WeightedGraph RandomGraph(int n, double edge_prob, WeightRange weights, std::uint64_t seed) {
  if (n < 1) throw InvalidParameterError("random graph needs n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw InvalidParameterError("edge probability must lie in [0, 1]");
  }
  CheckRange(weights);
  Rng rng(seed);
  WeightedGraph g;
  g.n = n;
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (rng.uniform01() < edge_prob) g.edges.push_back({u, v, DrawWeight(rng, weights)});
    }
  }
  return g;
}

WeightedHypergraph RandomHypergraph(int n, int num_edges, int max_arity, WeightRange weights,
                                    std::uint64_t seed) {
  if (max_arity < 2) throw InvalidParameterError("max arity must be >= 2");
  if (max_arity > n) throw InvalidParameterError("max arity exceeds the vertex count");
  if (num_edges < 0) throw InvalidParameterError("edge count must be >= 0");
  CheckRange(weights);
  Rng rng(seed);
  WeightedHypergraph h;
  h.n = n;
  std::vector<ElementId> pool(static_cast<std::size_t>(n));
  for (int e = 0; e < num_edges; ++e) {
    const int arity = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_arity - 1)));
    std::iota(pool.begin(), pool.end(), 0);
    IdList members = rng.sample_without_replacement(pool, static_cast<std::size_t>(arity));
    std::sort(members.begin(), members.end());
    h.hyperedges.push_back({std::move(members), DrawWeight(rng, weights)});
  }
  return h;
}

}  // namespace symsub
