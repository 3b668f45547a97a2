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

#include "symsub/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "symsub/errors.hpp"
#include "symsub/matching.hpp"

namespace symsub {

// ---------------------------------------------------------------------------
// Matroid

Matroid Matroid::Uniform(int n, int k) {
  if (n < 0) throw InvalidParameterError("negative ground set size");
  if (k < 0) throw InvalidParameterError("uniform matroid capacity must be >= 0");
  Matroid m;
  m.kind_ = Kind::kUniform;
  m.n_ = n;
  m.uniform_k_ = k;
  m.rank_ = std::min(k, n);
  return m;
}

Matroid Matroid::Partition(int n, std::vector<IdList> parts, std::vector<int> limits) {
  if (n < 0) throw MalformedInstanceError("negative ground set size");
  if (parts.size() != limits.size()) {
    throw MalformedInstanceError("partition matroid needs one limit per part");
  }
  Matroid m;
  m.kind_ = Kind::kPartition;
  m.n_ = n;
  m.part_of_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (limits[p] < 0) throw MalformedInstanceError("partition limit must be >= 0");
    std::sort(parts[p].begin(), parts[p].end());
    for (ElementId u : parts[p]) {
      if (u < 0 || u >= n) throw MalformedInstanceError("partition member outside 0..n-1");
      auto& owner = m.part_of_[static_cast<std::size_t>(u)];
      if (owner != -1) {
        throw MalformedInstanceError("element " + std::to_string(u) + " is in two parts");
      }
      owner = static_cast<int>(p);
    }
    m.rank_ += std::min(limits[p], static_cast<int>(parts[p].size()));
  }
  if (std::find(m.part_of_.begin(), m.part_of_.end(), -1) != m.part_of_.end()) {
    throw MalformedInstanceError("partition parts do not cover the ground set");
  }
  m.parts_ = std::move(parts);
  m.limits_ = std::move(limits);
  return m;
}

bool Matroid::independent(const Subset& s) const {
  if (s.universe() != n_) throw MalformedInstanceError("set universe differs from matroid");
  if (kind_ == Kind::kUniform) return s.size() <= uniform_k_;
  std::vector<int> used(parts_.size(), 0);
  for (ElementId u : s.ids()) {
    const int p = part_of_[static_cast<std::size_t>(u)];
    if (++used[static_cast<std::size_t>(p)] > limits_[static_cast<std::size_t>(p)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ExtendedMatroid

ExtendedMatroid::ExtendedMatroid(Matroid base) : base_(std::move(base)) {}

Subset ExtendedMatroid::real_part(const Subset& s) const {
  Subset real(base_.n());
  for (ElementId u : s.ids()) {
    if (!is_dummy(u)) real.insert(u);
  }
  return real;
}

bool ExtendedMatroid::independent(const Subset& s) const {
  if (s.universe() != universe()) {
    throw MalformedInstanceError("set universe differs from extended matroid");
  }
  return s.size() <= rank() && base_.independent(real_part(s));
}

Subset ExtendedMatroid::dummy_base() const {
  Subset s(universe());
  for (int i = 0; i < rank(); ++i) s.insert(base_.n() + i);
  return s;
}

Subset MaxWeightBase(const ExtendedMatroid& em, std::span<const double> weights,
                     const Subset& excluded) {
  const int universe = em.universe();
  if (static_cast<int>(weights.size()) != universe || excluded.universe() != universe) {
    throw InvalidArgumentError("weights/excluded must cover the extended ground set");
  }
  std::vector<ElementId> order;
  for (ElementId u = 0; u < universe; ++u) {
    if (!excluded.contains(u)) order.push_back(u);
  }
  std::stable_sort(order.begin(), order.end(), [&weights](ElementId x, ElementId y) {
    return weights[static_cast<std::size_t>(x)] > weights[static_cast<std::size_t>(y)];
  });

  const int k = em.rank();
  Subset base(universe);
  int size = 0;
  for (ElementId u : order) {
    if (size == k) break;
    base.insert(u);
    if (em.independent(base)) {
      ++size;
    } else {
      base.erase(u);
    }
  }
  for (ElementId d = em.real_count(); d < universe && size < k; ++d) {
    if (!excluded.contains(d) && !base.contains(d)) {
      base.insert(d);
      ++size;
    }
  }
  if (size != k) throw InternalInvariantError("could not complete a base of the extension");
  return base;
}

ExchangeMap ExchangeBijection(const ExtendedMatroid& em, const Subset& a_base,
                              const Subset& b_base) {
  const int k = em.rank();
  if (a_base.size() != k || b_base.size() != k || !em.independent(a_base) ||
      !em.independent(b_base)) {
    throw InvalidArgumentError("exchange bijection needs two bases of the extension");
  }
  ExchangeMap g;
  std::vector<ElementId> left;
  std::vector<ElementId> right;
  for (ElementId u : a_base.ids()) {
    if (b_base.contains(u)) {
      g[u] = u;
    } else {
      left.push_back(u);
    }
  }
  for (ElementId w : b_base.ids()) {
    if (!a_base.contains(w)) right.push_back(w);
  }

  std::vector<std::vector<int>> adjacency(left.size());
  for (std::size_t l = 0; l < left.size(); ++l) {
    for (std::size_t r = 0; r < right.size(); ++r) {
      Subset swapped = b_base.with(left[l]);
      swapped.erase(right[r]);
      if (em.independent(swapped)) adjacency[l].push_back(static_cast<int>(r));
    }
  }
  const std::vector<int> match = MaxBipartiteMatching(adjacency, static_cast<int>(right.size()));
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (match[l] < 0) throw InternalInvariantError("exchange graph has no perfect matching");
    g[left[l]] = right[static_cast<std::size_t>(match[l])];
  }

  // Re-check both properties of the map directly.
  Subset image(em.universe());
  for (const auto& [u, w] : g) {
    if (!b_base.contains(w) || image.contains(w)) {
      throw InternalInvariantError("exchange map is not one-to-one into B");
    }
    image.insert(w);
    if (b_base.contains(u) && w != u) {
      throw InternalInvariantError("exchange map moves a common element");
    }
    Subset swapped = b_base.with(u);
    swapped.erase(w);
    if (!em.independent(swapped)) throw InternalInvariantError("exchange B+u-g(u) is dependent");
  }
  return g;
}

// ---------------------------------------------------------------------------
// Packing and knapsack

PackingConstraint MakePacking(std::vector<std::vector<double>> a, std::vector<double> b) {
  if (a.size() != b.size()) throw MalformedInstanceError("packing A has m rows but b has other length");
  if (a.empty()) throw MalformedInstanceError("packing constraint needs at least one row");
  const std::size_t cols = a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw MalformedInstanceError("packing A is ragged");
    for (double x : row) {
      if (!(x >= 0.0 && x <= 1.0)) throw MalformedInstanceError("packing A entries must lie in [0,1]");
    }
  }
  for (double x : b) {
    if (!(x >= 1.0) || !std::isfinite(x)) throw MalformedInstanceError("packing b entries must be >= 1");
  }
  return PackingConstraint{std::move(a), std::move(b)};
}

double Width(const PackingConstraint& p) {
  double width = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    for (double x : p.a[i]) {
      if (x > 0.0) width = std::min(width, p.b[i] / x);
    }
  }
  if (std::isinf(width)) throw UndefinedWidthError("width undefined: A has no positive entry");
  return width;
}

KnapsackConstraint MakeKnapsack(std::vector<double> weights, double budget) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw MalformedInstanceError("knapsack weights must be finite and non-negative");
    }
  }
  if (!(budget > 0.0) || !std::isfinite(budget)) {
    throw MalformedInstanceError("knapsack budget must be positive");
  }
  return KnapsackConstraint{std::move(weights), budget};
}

NormalizedKnapsack NormalizeKnapsack(const KnapsackConstraint& kc) {
  const int n = kc.n();
  NormalizedKnapsack out{PackingConstraint{}, Subset(n)};
  double w_max = 0.0;
  for (ElementId j = 0; j < n; ++j) {
    const double w = kc.weights[static_cast<std::size_t>(j)];
    if (w <= kc.budget) {
      out.eligible.insert(j);
      w_max = std::max(w_max, w);
    }
  }
  std::vector<double> row(static_cast<std::size_t>(n), 0.0);
  double b = 1.0;
  if (w_max > 0.0) {
    for (ElementId j : out.eligible.ids()) {
      row[static_cast<std::size_t>(j)] = kc.weights[static_cast<std::size_t>(j)] / w_max;
    }
    b = kc.budget / w_max;
  }
  out.packing.a.push_back(std::move(row));
  out.packing.b.push_back(b);
  return out;
}

std::string_view ConstraintTypeName(const Constraint& c) {
  struct Visitor {
    std::string_view operator()(const CardinalityConstraint&) const { return "cardinality"; }
    std::string_view operator()(const Matroid& m) const {
      return m.kind() == Matroid::Kind::kUniform ? "uniform-matroid" : "partition-matroid";
    }
    std::string_view operator()(const PackingConstraint&) const { return "packing"; }
    std::string_view operator()(const KnapsackConstraint&) const { return "knapsack"; }
  };
  return std::visit(Visitor{}, c);
}

bool IsFeasible(const Constraint& c, const Subset& s) {
  struct Visitor {
    const Subset& s;
    bool operator()(const CardinalityConstraint& cc) const { return s.size() <= cc.k; }
    bool operator()(const Matroid& m) const { return m.independent(s); }
    bool operator()(const PackingConstraint& p) const {
      if (s.universe() != p.n()) throw MalformedInstanceError("set universe differs from packing columns");
      const IdList ids = s.ids();
      for (std::size_t i = 0; i < p.a.size(); ++i) {
        double load = 0.0;
        for (ElementId j : ids) load += p.a[i][static_cast<std::size_t>(j)];
        if (load > p.b[i]) return false;
      }
      return true;
    }
    bool operator()(const KnapsackConstraint& kc) const {
      if (s.universe() != kc.n()) throw MalformedInstanceError("set universe differs from knapsack weights");
      double load = 0.0;
      for (ElementId j : s.ids()) load += kc.weights[static_cast<std::size_t>(j)];
      return load <= kc.budget;
    }
  };
  return std::visit(Visitor{s}, c);
}

}  // namespace symsub
