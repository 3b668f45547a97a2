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

// Reference computations for tests. Nothing here calls into the library's
// evaluation, feasibility or enumeration code: cut values are recounted edge
// by edge over plain bit masks, and optima come from a direct scan.

#ifndef SYMSUB_TESTS_SUPPORT_HPP_
#define SYMSUB_TESTS_SUPPORT_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "symsub/constraints.hpp"
#include "symsub/oracle.hpp"

namespace symsub::testing {

using Mask = std::uint64_t;

inline bool Has(Mask m, int i) { return (m >> i) & 1U; }

inline Mask ToMask(const IdList& ids) {
  Mask m = 0;
  for (int u : ids) m |= Mask{1} << u;
  return m;
}

inline IdList ToIds(Mask m) {
  IdList ids;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) ids.push_back(i);
  }
  return ids;
}

inline double RecountCut(const WeightedGraph& g, Mask s) {
  double total = 0.0;
  for (const WeightedEdge& e : g.edges) {
    if (Has(s, e.u) != Has(s, e.v)) total += e.w;
  }
  return total;
}

inline double RecountHyperCut(const WeightedHypergraph& h, Mask s) {
  double total = 0.0;
  for (const Hyperedge& e : h.hyperedges) {
    int inside = 0;
    for (int u : e.members) inside += Has(s, u) ? 1 : 0;
    if (inside > 0 && inside < static_cast<int>(e.members.size())) total += e.w;
  }
  return total;
}

// values[mask] for all 2^n masks.
inline std::vector<double> Table(int n, const std::function<double(Mask)>& f) {
  std::vector<double> t(std::size_t{1} << n);
  for (Mask m = 0; m < t.size(); ++m) t[m] = f(m);
  return t;
}

inline std::vector<double> GraphTable(const WeightedGraph& g) {
  return Table(g.n, [&g](Mask m) { return RecountCut(g, m); });
}

struct Optimum {
  double value = 0.0;
  Mask witness = 0;
};

// Best table entry over masks accepted by `feasible`; ties keep the first.
inline Optimum ScanMax(const std::vector<double>& table, const std::function<bool(Mask)>& feasible) {
  Optimum best{-1.0, 0};
  bool found = false;
  for (Mask m = 0; m < table.size(); ++m) {
    if (!feasible(m)) continue;
    if (!found || table[m] > best.value) {
      best = {table[m], m};
      found = true;
    }
  }
  return best;
}

inline std::function<bool(Mask)> AtMost(int k) {
  return [k](Mask m) { return std::popcount(m) <= k; };
}

inline std::function<bool(Mask)> PartitionFeasible(const std::vector<IdList>& parts,
                                                   const std::vector<int>& limits) {
  return [parts, limits](Mask m) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      int count = 0;
      for (int u : parts[p]) count += Has(m, u) ? 1 : 0;
      if (count > limits[p]) return false;
    }
    return true;
  };
}

inline std::function<bool(Mask)> PackingFeasible(const std::vector<std::vector<double>>& a,
                                                 const std::vector<double>& b) {
  return [a, b](Mask m) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      double load = 0.0;
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        if (Has(m, static_cast<int>(j))) load += a[i][j];
      }
      if (load > b[i]) return false;
    }
    return true;
  };
}

inline std::function<bool(Mask)> KnapsackFeasible(const std::vector<double>& weights,
                                                  double budget) {
  return [weights, budget](Mask m) {
    double load = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (Has(m, static_cast<int>(j))) load += weights[j];
    }
    return load <= budget;
  };
}

// Test-side instance supply, independent of the library generators.
inline WeightedGraph RandomTestGraph(std::mt19937_64& rng, int n, double p, double lo, double hi) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(lo, hi);
  WeightedGraph g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.edges.push_back({u, v, weight(rng)});
    }
  }
  return g;
}

inline WeightedGraph Complete(int n) {
  WeightedGraph g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, 1.0});
  }
  return g;
}

inline WeightedGraph Cycle(int n) {
  WeightedGraph g{n, {}};
  for (int u = 0; u < n; ++u) g.edges.push_back({u, (u + 1) % n, 1.0});
  return g;
}

inline std::shared_ptr<const SetFunction> Cut(const WeightedGraph& g) {
  return std::make_shared<GraphCutFunction>(g);
}

inline std::string DataPath(const std::string& name) {
  return std::string(SYMSUB_TEST_DATA_DIR) + "/" + name;
}

}  // namespace symsub::testing

#endif  // SYMSUB_TESTS_SUPPORT_HPP_
