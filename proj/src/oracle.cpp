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

#include "symsub/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symsub/errors.hpp"
#include "symsub/kernels.hpp"
#include "symsub/rng.hpp"

namespace symsub {

std::string_view ToString(OracleKind kind) {
  switch (kind) {
    case OracleKind::kGraphCut:
      return "graph-cut";
    case OracleKind::kHypergraphCut:
      return "hypergraph-cut";
    case OracleKind::kTable:
      return "table";
  }
  return "unknown";
}

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNegative:
      return "negative";
    case ViolationKind::kAsymmetric:
      return "symmetry";
    case ViolationKind::kNotSubmodular:
      return "submodularity";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

GraphCutFunction::GraphCutFunction(WeightedGraph graph) : graph_(std::move(graph)) {
  if (graph_.n < 0) throw MalformedInstanceError("graph has negative vertex count");
  for (const WeightedEdge& e : graph_.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= graph_.n || e.v >= graph_.n) {
      throw MalformedInstanceError("edge endpoint outside 0..n-1");
    }
    if (e.u == e.v) throw MalformedInstanceError("self-loop on vertex " + std::to_string(e.u));
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw MalformedInstanceError("edge weight must be finite and non-negative");
    }
  }
}

double GraphCutFunction::value(const Subset& s) const {
  double total = 0.0;
  for (const WeightedEdge& e : graph_.edges) {
    if (s.contains(e.u) != s.contains(e.v)) total += e.w;
  }
  return total;
}

HypergraphCutFunction::HypergraphCutFunction(WeightedHypergraph hypergraph)
    : hypergraph_(std::move(hypergraph)) {
  if (hypergraph_.n < 0) throw MalformedInstanceError("hypergraph has negative vertex count");
  for (Hyperedge& e : hypergraph_.hyperedges) {
    std::sort(e.members.begin(), e.members.end());
    if (std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end()) {
      throw MalformedInstanceError("hyperedge lists a vertex twice");
    }
    if (e.members.size() < 2) throw MalformedInstanceError("hyperedge needs at least 2 members");
    if (e.members.front() < 0 || e.members.back() >= hypergraph_.n) {
      throw MalformedInstanceError("hyperedge member outside 0..n-1");
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw MalformedInstanceError("hyperedge weight must be finite and non-negative");
    }
  }
}

double HypergraphCutFunction::value(const Subset& s) const {
  double total = 0.0;
  for (const Hyperedge& e : hypergraph_.hyperedges) {
    std::size_t inside = 0;
    for (ElementId u : e.members) inside += s.contains(u) ? 1 : 0;
    if (inside != 0 && inside != e.members.size()) total += e.w;
  }
  return total;
}

TableFunction::TableFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n < 0 || n > kMaxN) {
    throw MalformedInstanceError("table oracle supports 0 <= n <= " + std::to_string(kMaxN));
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw MalformedInstanceError("table has " + std::to_string(values_.size()) +
                                 " values, expected 2^" + std::to_string(n));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw MalformedInstanceError("table value is not finite");
  }
}

double TableFunction::value(const Subset& s) const {
  const auto words = s.words();
  const std::uint64_t index = words.empty() ? 0 : words[0];
  return values_[static_cast<std::size_t>(index)];
}

// ---------------------------------------------------------------------------

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> function)
    : function_(std::move(function)) {
  if (!function_) throw InvalidArgumentError("null set function");
}

double ValueOracle::eval(const Subset& s) const {
  if (s.universe() != function_->n()) {
    throw InvalidSetError("set over universe " + std::to_string(s.universe()) +
                          " passed to oracle with n = " + std::to_string(function_->n()));
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  return function_->value(s);
}

double ValueOracle::eval(std::span<const ElementId> ids) const {
  return eval(Subset::FromIds(function_->n(), ids));
}

double Marginal(const ValueOracle& oracle, ElementId u, const Subset& s, double f_s) {
  if (u < 0 || u >= s.universe()) throw InvalidSetError("element id outside ground set");
  if (s.contains(u)) {
    throw InvalidArgumentError("marginal of element " + std::to_string(u) +
                               " that is already in the set");
  }
  return oracle.eval(s.with(u)) - f_s;
}

// ---------------------------------------------------------------------------

ValidationReport ValidateExhaustive(const SetFunction& f) {
  if (f.n() > kMaxExhaustiveValidationN) {
    throw InvalidParameterError("exhaustive validation needs n <= " +
                                std::to_string(kMaxExhaustiveValidationN));
  }
  const std::vector<double> table = kernels::TabulateParallel(f);
  kernels::TableScan scan = kernels::ScanTableParallel(f.n(), table);
  ValidationReport report;
  report.mode = "exhaustive";
  report.checks = scan.checks;
  report.violation_count = scan.violation_count;
  report.violations = std::move(scan.listed);
  return report;
}

ValidationReport ValidateSampled(const SetFunction& f, int trials, std::uint64_t seed) {
  if (trials < 0) throw InvalidParameterError("trials must be non-negative");
  const int n = f.n();
  Rng rng(seed);
  ValidationReport report;
  report.mode = "sampled";
  auto record = [&report](Violation v) {
    ++report.violation_count;
    if (report.violations.size() < ValidationReport::kMaxListed) {
      report.violations.push_back(std::move(v));
    }
  };
  auto random_subset = [&rng, n]() {
    Subset s(n);
    for (ElementId u = 0; u < n; ++u) {
      if (rng.uniform01() < 0.5) s.insert(u);
    }
    return s;
  };

  for (int trial = 0; trial < trials; ++trial) {
    const Subset s = random_subset();
    const double f_s = f.value(s);
    ++report.checks;
    if (f_s < -kCheckTolerance) record({ViolationKind::kNegative, s.ids(), {}, -1, {f_s}});
    const double f_comp = f.value(s.complement());
    ++report.checks;
    if (std::abs(f_s - f_comp) > kCheckTolerance) {
      record({ViolationKind::kAsymmetric, s.ids(), {}, -1, {f_s, f_comp}});
    }

    if (n == 0) continue;
    // T is a random set missing u; S a random subset of T.
    const auto u = static_cast<ElementId>(rng.below(static_cast<std::uint64_t>(n)));
    Subset t = random_subset();
    t.erase(u);
    Subset small(n);
    for (ElementId x : t.ids()) {
      if (rng.uniform01() < 0.5) small.insert(x);
    }
    ++report.checks;
    const double gain_small = f.value(small.with(u)) - f.value(small);
    const double gain_large = f.value(t.with(u)) - f.value(t);
    if (gain_small < gain_large - kCheckTolerance) {
      record({ViolationKind::kNotSubmodular, small.ids(), t.ids(), u, {gain_small, gain_large}});
    }
  }
  return report;
}

}  // namespace symsub
