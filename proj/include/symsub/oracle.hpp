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

#ifndef SYMSUB_ORACLE_HPP_
#define SYMSUB_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symsub/subset.hpp"

namespace symsub {

// Absolute tolerance for every equality/inequality check made by validators
// and property checks. Solver decisions never use it.
inline constexpr double kCheckTolerance = 1e-9;

struct WeightedEdge {
  ElementId u = 0;
  ElementId v = 0;
  double w = 0.0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct WeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

struct Hyperedge {
  IdList members;
  double w = 0.0;
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

struct WeightedHypergraph {
  int n = 0;
  std::vector<Hyperedge> hyperedges;
  friend bool operator==(const WeightedHypergraph&, const WeightedHypergraph&) = default;
};

enum class OracleKind { kGraphCut, kHypergraphCut, kTable };

std::string_view ToString(OracleKind kind);

// An immutable set function over the ground set 0..n-1. value() is pure and
// uncounted; solvers go through ValueOracle instead.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int n() const = 0;
  virtual OracleKind kind() const = 0;
  // `s.universe()` must equal n(); ValueOracle checks this.
  virtual double value(const Subset& s) const = 0;
};

class GraphCutFunction final : public SetFunction {
 public:
  // Throws MalformedInstanceError on self-loops, out-of-range endpoints or
  // negative weights.
  explicit GraphCutFunction(WeightedGraph graph);

  int n() const override { return graph_.n; }
  OracleKind kind() const override { return OracleKind::kGraphCut; }
  double value(const Subset& s) const override;
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// A hyperedge e with weight w contributes w to f(S) iff S cuts e, i.e.
// S∩e is neither empty nor all of e.
class HypergraphCutFunction final : public SetFunction {
 public:
  explicit HypergraphCutFunction(WeightedHypergraph hypergraph);

  int n() const override { return hypergraph_.n; }
  OracleKind kind() const override { return OracleKind::kHypergraphCut; }
  double value(const Subset& s) const override;
  const WeightedHypergraph& hypergraph() const { return hypergraph_; }

 private:
  WeightedHypergraph hypergraph_;
};

// Explicit value table; S is stored at index sum_{i in S} 2^i.
class TableFunction final : public SetFunction {
 public:
  static constexpr int kMaxN = 30;

  // Throws MalformedInstanceError unless values.size() == 2^n.
  TableFunction(int n, std::vector<double> values);

  int n() const override { return n_; }
  OracleKind kind() const override { return OracleKind::kTable; }
  double value(const Subset& s) const override;
  const std::vector<double>& values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

// Counted access to a SetFunction. The payload is shared and immutable; the
// counter belongs to this object, so each solver run should own one
// (see fresh_context()). eval() may be called concurrently.
class ValueOracle {
 public:
  explicit ValueOracle(std::shared_ptr<const SetFunction> function);
  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;
  ValueOracle(ValueOracle&& other) noexcept
      : function_(std::move(other.function_)), queries_(other.query_count()) {}

  // Same payload, counter starting at zero.
  ValueOracle fresh_context() const { return ValueOracle(function_); }

  int n() const { return function_->n(); }
  const SetFunction& function() const { return *function_; }
  const std::shared_ptr<const SetFunction>& shared_function() const { return function_; }

  // f(S). Counts one query. Throws InvalidSetError if S is over the wrong
  // universe or names an id >= n.
  double eval(const Subset& s) const;
  double eval(std::span<const ElementId> ids) const;

  std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }
  void reset_queries() { queries_.store(0, std::memory_order_relaxed); }

 private:
  std::shared_ptr<const SetFunction> function_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// f(u|S) = f(S+u) - fS, where fS is the caller's cached f(S). Exactly one
// query. Throws InvalidArgumentError if u is already in S.
double Marginal(const ValueOracle& oracle, ElementId u, const Subset& s, double f_s);

// ---------------------------------------------------------------------------
// Validation of the non-negativity / symmetry / submodularity assumptions.

enum class ViolationKind { kNegative, kAsymmetric, kNotSubmodular };

std::string_view ToString(ViolationKind kind);

// kNegative: values = {f(S)}.
// kAsymmetric: values = {f(S), f(N\S)}.
// kNotSubmodular: S ⊆ T, u ∉ T, values = {f(u|S), f(u|T)} with f(u|S) < f(u|T).
struct Violation {
  ViolationKind kind = ViolationKind::kNegative;
  IdList s;
  IdList t;
  ElementId u = -1;
  std::vector<double> values;
};

struct ValidationReport {
  static constexpr std::size_t kMaxListed = 10000;

  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t checks = 0;
  std::uint64_t violation_count = 0;
  // The first kMaxListed violations in check order.
  std::vector<Violation> violations;

  bool valid() const { return violation_count == 0; }
};

inline constexpr int kMaxExhaustiveValidationN = 20;

// All 2^n sets for non-negativity and symmetry; submodularity through the
// equivalent local form f(u|S) >= f(u|S+v) for every S and u, v ∉ S.
// Throws InvalidParameterError if n > 20.
ValidationReport ValidateExhaustive(const SetFunction& f);

// `trials` random sets S for non-negativity and symmetry, and `trials` random
// triples S ⊆ T, u ∉ T for diminishing returns.
ValidationReport ValidateSampled(const SetFunction& f, int trials, std::uint64_t seed);

}  // namespace symsub

#endif  // SYMSUB_ORACLE_HPP_
