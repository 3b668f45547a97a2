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

#ifndef SYMSUB_TRACE_HPP_
#define SYMSUB_TRACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsub/subset.hpp"

namespace symsub {

struct RoundRecord {
  int index = 0;  // 1-based
  // Element added this round; -1 when the round is not a single addition
  // (knapsack enumeration records one round per seed, and a cardinality round
  // whose candidates all have negative marginals adds nothing). In matroid runs ids
  // >= n are dummies.
  ElementId selected = -1;
  // Matroid runs: the element swapped out, g(selected).
  ElementId swapped_out = -1;
  IdList before_delete;
  IdList after_delete;
  double value = 0.0;  // f(after_delete)
  std::uint64_t cumulative_queries = 0;
  // Packing runs: sum_i A_{i,selected} w_i and sum_i b_i w_i, both taken
  // before this round's weight update.
  std::optional<double> price;
  std::optional<double> beta_before;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct TraceParams {
  std::optional<int> k;
  std::optional<double> epsilon;
  std::optional<double> lambda;
  bool lambda_overridden = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> rounds_k;     // matroid round count K
  std::optional<int> sample_size;  // r for the sampling greedy
  std::optional<double> width;     // packing width W

  friend bool operator==(const TraceParams&, const TraceParams&) = default;
};

struct RunTrace {
  std::string algorithm;
  TraceParams params;
  // Solution before round 1 (empty, or the dummy base's real part) and its value.
  IdList initial_set;
  double initial_value = 0.0;
  std::vector<RoundRecord> rounds;
  IdList final_set;
  double final_value = 0.0;
  std::uint64_t total_queries = 0;
  bool feasible = true;
  std::vector<std::string> warnings;

  // f(S_{i-1}) for the round at position `pos` in `rounds`.
  double value_before(std::size_t pos) const {
    return pos == 0 ? initial_value : rounds[pos - 1].value;
  }

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

}  // namespace symsub

#endif  // SYMSUB_TRACE_HPP_
