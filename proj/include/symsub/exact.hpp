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

#ifndef SYMSUB_EXACT_HPP_
#define SYMSUB_EXACT_HPP_

#include <cstdint>
#include <optional>

#include "symsub/constraints.hpp"
#include "symsub/oracle.hpp"
#include "symsub/trace.hpp"

namespace symsub {

inline constexpr int kMaxBruteForceN = 24;

struct ExactResult {
  double opt_value = 0.0;
  IdList witness;
  std::uint64_t sets_enumerated = 0;
};

enum class Parallelism { kSerial, kParallel };

// Maximum of f over all feasible subsets, enumerated in increasing integer
// encoding; ties go to the smallest encoding. Evaluates the payload directly,
// so no oracle counter is touched. Throws InstanceTooLargeError if n > 24.
ExactResult BruteForceOpt(const SetFunction& f, const Constraint& constraint,
                          Parallelism parallelism = Parallelism::kParallel);

inline ExactResult BruteForceOpt(const ValueOracle& oracle, const Constraint& constraint,
                                 Parallelism parallelism = Parallelism::kParallel) {
  return BruteForceOpt(oracle.function(), constraint, parallelism);
}

// final_value / opt_value; nullopt ("vacuous") when opt_value is 0.
std::optional<double> Ratio(const RunTrace& trace, const ExactResult& exact);

}  // namespace symsub

#endif  // SYMSUB_EXACT_HPP_
