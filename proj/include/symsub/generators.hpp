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

#ifndef SYMSUB_GENERATORS_HPP_
#define SYMSUB_GENERATORS_HPP_

#include <cstdint>

#include "symsub/oracle.hpp"
#include "symsub/subset.hpp"

namespace symsub {

struct WeightRange {
  double lo = 1.0;
  double hi = 1.0;
};

// Bipartite MAX-CUT instance on which GreedyCardinality(k) returns exactly
// (k/2)(1 - (1-2/k)^k) while the optimum is k.
//
// Ids: u_1..u_k are 0..k-1, o_1..o_k are k..2k-1, and v_{ij} (i in 1..k,
// j in 1..c) is 2k + (i-1)c + (j-1). Placing u_j below every o_i makes the
// lowest-id tie-break pick u_j in round j.
struct TightExample {
  int k = 0;
  int c = 0;
  WeightedGraph graph;
  IdList o_ids;
  IdList u_ids;
  IdList v_ids;
  double optimal_value = 0.0;  // = k, attained by o_ids
  double greedy_value = 0.0;   // (k/2)(1 - (1-2/k)^k)
};

// c = ceil((1 + q^k) / (2 q^{k-1})) with q = 1 - 2/k. Requires k >= 3.
int TightExampleC(int k);

// Throws InvalidParameterError if k < 3.
TightExample MakeTightExample(int k);

// Each unordered pair {u, v}, u < v, scanned lexicographically, becomes an
// edge with probability edge_prob and weight lo + (hi - lo) * U[0,1).
// Throws InvalidParameterError if n < 1, edge_prob outside [0,1] or the
// range is not 0 <= lo <= hi.
WeightedGraph RandomGraph(int n, double edge_prob, WeightRange weights, std::uint64_t seed);

// Each hyperedge draws arity uniformly in [2, max_arity], then that many
// distinct members, then a weight. Throws InvalidParameterError if
// max_arity < 2 or max_arity > n.
WeightedHypergraph RandomHypergraph(int n, int num_edges, int max_arity, WeightRange weights,
                                    std::uint64_t seed);

}  // namespace symsub

#endif  // SYMSUB_GENERATORS_HPP_
