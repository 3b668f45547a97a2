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

#include "symsub/exact.hpp"

#include <string>

#include "symsub/errors.hpp"
#include "symsub/kernels.hpp"

namespace symsub {

ExactResult BruteForceOpt(const SetFunction& f, const Constraint& constraint,
                          Parallelism parallelism) {
  if (f.n() > kMaxBruteForceN) {
    throw InstanceTooLargeError("brute force supports n <= " + std::to_string(kMaxBruteForceN) +
                                ", got n = " + std::to_string(f.n()));
  }
  auto feasible = [&constraint](const Subset& s) { return IsFeasible(constraint, s); };
  const kernels::MaskArgmax best = parallelism == Parallelism::kParallel
                                       ? kernels::BestFeasibleParallel(f, feasible)
                                       : kernels::BestFeasibleSerial(f, feasible);
  if (!best.found) {
    // Every constraint family admits the empty set.
    throw InternalInvariantError("no feasible set found, not even the empty set");
  }
  return ExactResult{best.value, MaskToIds(best.mask), best.feasible_count};
}

std::optional<double> Ratio(const RunTrace& trace, const ExactResult& exact) {
  if (exact.opt_value == 0.0) return std::nullopt;
  return trace.final_value / exact.opt_value;
}

}  // namespace symsub
