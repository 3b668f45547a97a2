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

// Greedy-type solvers for non-negative symmetric submodular maximization.
//
// Every solver follows the same query discipline: f(S) of the current
// solution is cached, each candidate costs one query for f(S+u), and the
// removal pass costs one query per visited element. Query counts reported in
// the trace are the oracle counter delta over the run.
//
// Argmax selections break ties towards the lowest element id. Two candidate
// values closer than kTieRelTolerance (relative) count as tied, so that
// rounding noise in the oracle does not decide ties that are exact in real
// arithmetic.

#ifndef SYMSUB_ALGORITHMS_HPP_
#define SYMSUB_ALGORITHMS_HPP_

#include <cstdint>
#include <optional>

#include "symsub/constraints.hpp"
#include "symsub/oracle.hpp"
#include "symsub/subset.hpp"
#include "symsub/trace.hpp"

namespace symsub {

inline constexpr double kTieRelTolerance = 1e-12;

struct DeleteResult {
  Subset set;
  double value = 0.0;
};

// Single pass over S\protected in ascending id; u is removed iff
// f(S) - f(S-u) < 0 against the current S. Costs one query per visited
// element plus one for f(S) (none when `f_s` is supplied). The output never
// has lower value than the input. `protected_set` must be a subset of S.
DeleteResult DeletePass(const ValueOracle& oracle, Subset s, const Subset& protected_set,
                        std::optional<double> f_s = std::nullopt);

Subset Delete(const ValueOracle& oracle, const Subset& s);

// k rounds: add the max-marginal element of N\S, then DeletePass.
// Throws InvalidParameterError unless 1 <= k <= n.
RunTrace GreedyCardinality(const ValueOracle& oracle, int k);

// As GreedyCardinality, but each round scans r = ceil((n/k) ln(1/eps))
// elements of N\S drawn without replacement (all of N\S when r covers it).
// Throws InvalidParameterError unless 1 <= k <= n and 0 < eps < 1.
RunTrace SampleGreedyCardinality(const ValueOracle& oracle, int k, double epsilon,
                                 std::uint64_t seed);

// Local-search greedy over the matroid extended with 2k dummies: K =
// ceil((k/3) ln(1/eps)) rounds of "max-weight base, exchange bijection, best
// single swap, DeletePass". After the removal pass the solution is padded
// back to a base with unused dummies. Throws InvalidParameterError unless
// rank >= 1 and 0 < eps < 1, InvalidArgumentError if the matroid's ground set
// differs from the oracle's.
RunTrace GreedyMatroid(const ValueOracle& oracle, const Matroid& matroid, double epsilon);

struct MwOptions {
  // Replaces lambda = exp(eps W). Must be > 1.
  std::optional<double> lambda_override;
};

// Multiplicative-weights greedy under A x_S <= b, lambda = exp(eps W).
// Throws InvalidParameterError unless 0 < eps < 1, UndefinedWidthError if A
// is all zero, InvalidArgumentError if A's columns differ from n.
RunTrace MwPacking(const ValueOracle& oracle, const PackingConstraint& packing, double epsilon,
                   const MwOptions& options = {});

// The same on a knapsack, after NormalizeKnapsack.
RunTrace MwPacking(const ValueOracle& oracle, const KnapsackConstraint& knapsack, double epsilon,
                   const MwOptions& options = {});

inline constexpr double kKnapsackEnumEpsilon = 0.1;

// Partial enumeration: every feasible seed T with |T| <= 2 is evaluated and
// then extended by MwPacking over {j not in T : w_j <= min_{t in T} w_t} with
// the residual budget, T protected from removal. Returns the best set seen.
RunTrace KnapsackEnum(const ValueOracle& oracle, const KnapsackConstraint& knapsack,
                      double epsilon = kKnapsackEnumEpsilon);

// ---------------------------------------------------------------------------
// Parameters, guarantees and query bounds.

// ceil((n/k) ln(1/eps)).
int SampleSize(int n, int k, double epsilon);
// ceil((k/3) ln(1/eps)).
int MatroidRounds(int k, double epsilon);

// (1/2)(1 - (1 - 2/k)^k).
double CardinalityGuarantee(int k);
// (1/2)(1 - e^{-2(1-eps)}).
double SampleGreedyGuarantee(double epsilon);
// (1/3)(1 - (1 - 3/k)^K); only meaningful for k >= 4.
double MatroidGuarantee(int k, int rounds);
// (1/2)(1 - e^{-2(1-3 eps)}).
double PackingGuarantee(double epsilon);
// max{ln m, 1} / eps^2.
double PackingWidthThreshold(int m, double epsilon);

std::uint64_t GreedyCardinalityQueryBound(int n, int k);  // k(n+k+2)
std::uint64_t SampleGreedyQueryBound(int r, int k);       // k(r+k+2)
std::uint64_t GreedyMatroidQueryBound(int n, int k, int rounds);  // K(n+2k+2)
std::uint64_t MwPackingQueryBound(int n);                 // n(2n+2)

}  // namespace symsub

#endif  // SYMSUB_ALGORITHMS_HPP_
