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

#ifndef SYMSUB_CONSTRAINTS_HPP_
#define SYMSUB_CONSTRAINTS_HPP_

#include <map>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "symsub/subset.hpp"

namespace symsub {

// |S| <= k.
struct CardinalityConstraint {
  int k = 1;
  friend bool operator==(const CardinalityConstraint&, const CardinalityConstraint&) = default;
};

// Uniform or partition matroid over 0..n-1.
class Matroid {
 public:
  enum class Kind { kUniform, kPartition };

  // Throws InvalidParameterError if k < 0.
  static Matroid Uniform(int n, int k);
  // `parts` must be disjoint and cover 0..n-1; limits[i] >= 0 caps how many
  // elements of parts[i] an independent set may hold. Throws
  // MalformedInstanceError otherwise.
  static Matroid Partition(int n, std::vector<IdList> parts, std::vector<int> limits);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int rank() const { return rank_; }
  // Uniform capacity; meaningful for kUniform only.
  int uniform_k() const { return uniform_k_; }
  const std::vector<IdList>& parts() const { return parts_; }
  const std::vector<int>& limits() const { return limits_; }

  bool independent(const Subset& s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.uniform_k_ == b.uniform_k_ &&
           a.parts_ == b.parts_ && a.limits_ == b.limits_;
  }

 private:
  Matroid() = default;

  Kind kind_ = Kind::kUniform;
  int n_ = 0;
  int rank_ = 0;
  int uniform_k_ = 0;
  std::vector<IdList> parts_;
  std::vector<int> limits_;
  std::vector<int> part_of_;
};

// The matroid lifted with 2k dummy elements, ids n..n+2k-1 where k is the base
// rank: S is independent iff S\D is independent in the base and |S| <= k.
// Every independent set extends to a base of size exactly k using dummies.
class ExtendedMatroid {
 public:
  explicit ExtendedMatroid(Matroid base);

  const Matroid& base() const { return base_; }
  int real_count() const { return base_.n(); }
  int rank() const { return base_.rank(); }
  int universe() const { return base_.n() + 2 * base_.rank(); }
  bool is_dummy(ElementId u) const { return u >= base_.n(); }

  // `s` ranges over universe().
  bool independent(const Subset& s) const;
  // S\D as a subset of the base ground set.
  Subset real_part(const Subset& s) const;
  // The first k dummies.
  Subset dummy_base() const;

 private:
  Matroid base_;
};

// Maximum-weight base of the extension among elements outside `excluded`:
// candidates are scanned by descending weight, then ascending id (so real
// elements precede dummies at equal weight), each kept iff independence is
// preserved; the result is padded with the lowest unused dummies to size k.
// weights.size() must equal em.universe(); dummy weights are expected to be 0.
// Throws InternalInvariantError if no base of size k can be formed.
Subset MaxWeightBase(const ExtendedMatroid& em, std::span<const double> weights,
                     const Subset& excluded);

using ExchangeMap = std::map<ElementId, ElementId>;

// One-to-one g: A -> B with g(u) = u on A∩B and B+u-g(u) independent for
// every u in A, for bases A and B of the extension. Found as a perfect
// matching in the exchange graph on (A\B) x (B\A), both sides scanned in
// ascending id. Throws InvalidArgumentError if A or B is not a base and
// InternalInvariantError if the matching or its re-check fails.
ExchangeMap ExchangeBijection(const ExtendedMatroid& em, const Subset& a_base,
                              const Subset& b_base);

// A x_S <= b with A in [0,1]^{m x n}, b >= 1.
struct PackingConstraint {
  std::vector<std::vector<double>> a;
  std::vector<double> b;

  int m() const { return static_cast<int>(a.size()); }
  int n() const { return a.empty() ? 0 : static_cast<int>(a.front().size()); }

  friend bool operator==(const PackingConstraint&, const PackingConstraint&) = default;
};

// Throws MalformedInstanceError on ragged rows, entries outside [0,1], b < 1
// or a row/vector length mismatch.
PackingConstraint MakePacking(std::vector<std::vector<double>> a, std::vector<double> b);

// min{ b_i / A_ij : A_ij > 0 }. Throws UndefinedWidthError if A is all zero.
double Width(const PackingConstraint& p);

struct KnapsackConstraint {
  std::vector<double> weights;
  double budget = 0.0;

  int n() const { return static_cast<int>(weights.size()); }

  friend bool operator==(const KnapsackConstraint&, const KnapsackConstraint&) = default;
};

// Throws MalformedInstanceError on negative weights or a non-positive budget.
KnapsackConstraint MakeKnapsack(std::vector<double> weights, double budget);

// Knapsack in packing form: elements heavier than the budget are marked
// ineligible (their column is zero), the rest get A_1j = w_j / w_max and
// b_1 = budget / w_max, where w_max is the largest eligible weight. If every
// eligible weight is zero, A is all zero and b_1 = 1.
struct NormalizedKnapsack {
  PackingConstraint packing;
  Subset eligible;
};

NormalizedKnapsack NormalizeKnapsack(const KnapsackConstraint& kc);

using Constraint =
    std::variant<CardinalityConstraint, Matroid, PackingConstraint, KnapsackConstraint>;

std::string_view ConstraintTypeName(const Constraint& c);

// Exact membership test. Throws MalformedInstanceError when S's universe
// differs from the constraint's ground set size (matroid/packing/knapsack).
bool IsFeasible(const Constraint& c, const Subset& s);

}  // namespace symsub

#endif  // SYMSUB_CONSTRAINTS_HPP_
