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

#ifndef SYMSUB_CLI_HPP_
#define SYMSUB_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symsub/constraints.hpp"
#include "symsub/errors.hpp"
#include "symsub/oracle.hpp"
#include "symsub/trace.hpp"

namespace symsub {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitViolations = 3;

// Algorithm/constraint pairing that cannot run.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SolverParams {
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::optional<double> lambda_override;
};

// Dispatches `algorithm` (greedy-card, sample-greedy-card, greedy-matroid,
// mw-packing, knapsack-enum) on a compatible constraint; throws UsageError
// for unknown algorithms or incompatible pairs.
RunTrace RunAlgorithm(const std::string& algorithm, const ValueOracle& oracle,
                      const Constraint& constraint, const SolverParams& params);

// Entry point of the symsub tool. args[0] is the program name. Reports go to
// the files named by --out; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& err);

}  // namespace symsub

#endif  // SYMSUB_CLI_HPP_
