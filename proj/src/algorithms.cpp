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

#include "symsub/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "symsub/errors.hpp"
#include "symsub/rng.hpp"

namespace symsub {

namespace {

// True if `candidate` beats `incumbent` by more than rounding noise.
bool Improves(double candidate, double incumbent) {
  const double scale = std::max(std::abs(candidate), std::abs(incumbent));
  return candidate > incumbent + kTieRelTolerance * scale;
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidParameterError("epsilon must lie in (0, 1)");
  }
}

void CheckCardinality(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidParameterError("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                                ", n = " + std::to_string(n) + ")");
  }
}

// Tracks the query delta of one run.
class QueryClock {
 public:
  explicit QueryClock(const ValueOracle& oracle) : oracle_(oracle), start_(oracle.query_count()) {}
  std::uint64_t elapsed() const { return oracle_.query_count() - start_; }

 private:
  const ValueOracle& oracle_;
  std::uint64_t start_;
};

// One add-then-delete round over an explicit candidate list (ascending ids).
void CardinalityRound(const ValueOracle& oracle, const std::vector<ElementId>& candidates,
                      Subset& s, double& f_s, RoundRecord& round) {
  ElementId best = -1;
  double best_value = 0.0;
  for (ElementId u : candidates) {
    const double value = oracle.eval(s.with(u));
    if (best < 0 || Improves(value, best_value)) {
      best = u;
      best_value = value;
    }
  }
  // Members of S have marginal 0, so a negative best means nothing is added
  // and the round only re-runs Delete.
  if (best >= 0 && best_value >= f_s) {
    s.insert(best);
    round.selected = best;
  } else {
    best_value = f_s;
  }
  round.before_delete = s.ids();
  DeleteResult cleaned = DeletePass(oracle, std::move(s), Subset(oracle.n()), best_value);
  s = std::move(cleaned.set);
  f_s = cleaned.value;
  round.after_delete = s.ids();
  round.value = f_s;
}

std::vector<ElementId> Outside(const Subset& s) {
  std::vector<ElementId> out;
  for (ElementId u = 0; u < s.universe(); ++u) {
    if (!s.contains(u)) out.push_back(u);
  }
  return out;
}

// The multiplicative-weights loop shared by MwPacking and KnapsackEnum.
// Weights are driven by (a, b) restricted to `candidates`; feasibility of the
// whole solution (seed included) is judged by `feasible`.
struct MwProblem {
  const std::vector<std::vector<double>>* a = nullptr;
  const std::vector<double>* b = nullptr;
  Subset candidates;
  Subset seed;
  double seed_value = 0.0;
  double lambda = 1.0;
  std::function<bool(const Subset&)> feasible;
};

DeleteResult RunMultiplicativeWeights(const ValueOracle& oracle, const MwProblem& problem,
                                      const QueryClock& clock, std::vector<RoundRecord>* rounds) {
  const auto& a = *problem.a;
  const auto& b = *problem.b;
  const std::size_t m = a.size();
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = 1.0 / b[i];
  auto beta_of = [&]() {
    double beta = 0.0;
    for (std::size_t i = 0; i < m; ++i) beta += b[i] * w[i];
    return beta;
  };

  Subset s = problem.seed;
  double f_s = problem.seed_value;
  double beta = beta_of();
  ElementId last_added = -1;
  int index = 0;

  for (;;) {
    if (!(beta <= problem.lambda)) break;
    // An infeasible S already forces beta > lambda in exact arithmetic; the
    // explicit test keeps the output feasible under rounding as well.
    if (!problem.feasible(s)) break;

    ElementId best_free = -1;
    double best_free_value = 0.0;
    ElementId best_priced = -1;
    double best_density = 0.0;
    double best_priced_value = 0.0;
    double best_priced_price = 0.0;
    bool any_candidate = false;
    for (ElementId j : problem.candidates.ids()) {
      if (s.contains(j)) continue;
      any_candidate = true;
      const double value = oracle.eval(s.with(j));
      double price = 0.0;
      for (std::size_t i = 0; i < m; ++i) price += a[i][static_cast<std::size_t>(j)] * w[i];
      if (price == 0.0) {
        if (best_free < 0 || Improves(value, best_free_value)) {
          best_free = j;
          best_free_value = value;
        }
        continue;
      }
      const double density = (value - f_s) / price;
      if (best_priced < 0 || Improves(density, best_density)) {
        best_priced = j;
        best_density = density;
        best_priced_value = value;
        best_priced_price = price;
      }
    }
    if (!any_candidate) break;

    // A zero-price element has infinite density whenever its gain is positive.
    ElementId chosen = -1;
    double chosen_value = 0.0;
    double chosen_price = 0.0;
    if (best_free >= 0 && best_free_value - f_s > 0.0) {
      chosen = best_free;
      chosen_value = best_free_value;
    } else if (best_priced >= 0 && best_priced_value - f_s > 0.0) {
      chosen = best_priced;
      chosen_value = best_priced_value;
      chosen_price = best_priced_price;
    } else {
      break;
    }

    RoundRecord round;
    round.index = ++index;
    round.selected = chosen;
    round.price = chosen_price;
    round.beta_before = beta;
    s.insert(chosen);
    round.before_delete = s.ids();
    DeleteResult cleaned = DeletePass(oracle, std::move(s), problem.seed, chosen_value);
    s = std::move(cleaned.set);
    f_s = cleaned.value;
    round.after_delete = s.ids();
    round.value = f_s;
    last_added = chosen;

    for (std::size_t i = 0; i < m; ++i) {
      const double exponent = a[i][static_cast<std::size_t>(chosen)] / b[i];
      if (exponent > 0.0) w[i] *= std::pow(problem.lambda, exponent);
    }
    beta = beta_of();
    round.cumulative_queries = clock.elapsed();
    if (rounds != nullptr) rounds->push_back(std::move(round));
  }

  if (!problem.feasible(s) && last_added >= 0 && s.contains(last_added)) {
    s.erase(last_added);
    f_s = oracle.eval(s);
  }
  return {std::move(s), f_s};
}

void FinishTrace(RunTrace& trace, const Subset& s, double f_s, const QueryClock& clock) {
  trace.final_set = s.ids();
  trace.final_value = f_s;
  trace.total_queries = clock.elapsed();
}

std::string FormatDouble(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

RunTrace MwPackingImpl(const ValueOracle& oracle, const std::vector<std::vector<double>>& a,
                       const std::vector<double>& b, const Subset& candidates,
                       std::optional<double> width, double epsilon, const MwOptions& options,
                       std::function<bool(const Subset&)> feasible) {
  CheckEpsilon(epsilon);
  const QueryClock clock(oracle);
  RunTrace trace;
  trace.algorithm = "mw-packing";
  trace.params.epsilon = epsilon;
  trace.params.width = width;

  double lambda = std::numeric_limits<double>::infinity();
  if (options.lambda_override) {
    if (!(*options.lambda_override > 1.0)) throw InvalidParameterError("lambda must exceed 1");
    lambda = *options.lambda_override;
    trace.params.lambda_overridden = true;
  } else if (width) {
    lambda = std::exp(epsilon * *width);
  }
  trace.params.lambda = lambda;

  const int m = static_cast<int>(a.size());
  if (width && *width < PackingWidthThreshold(m, epsilon)) {
    trace.warnings.push_back("width " + FormatDouble(*width) + " is below max{ln m, 1}/eps^2 = " +
                             FormatDouble(PackingWidthThreshold(m, epsilon)) +
                             "; the approximation guarantee does not apply");
  }

  Subset empty(oracle.n());
  const double f_empty = oracle.eval(empty);
  trace.initial_value = f_empty;

  MwProblem problem;
  problem.a = &a;
  problem.b = &b;
  problem.candidates = candidates;
  problem.seed = empty;
  problem.seed_value = f_empty;
  problem.lambda = lambda;
  problem.feasible = std::move(feasible);
  DeleteResult result = RunMultiplicativeWeights(oracle, problem, clock, &trace.rounds);
  trace.feasible = problem.feasible(result.set);
  FinishTrace(trace, result.set, result.value, clock);
  return trace;
}

}  // namespace

// ---------------------------------------------------------------------------

DeleteResult DeletePass(const ValueOracle& oracle, Subset s, const Subset& protected_set,
                        std::optional<double> f_s) {
  double current = f_s ? *f_s : oracle.eval(s);
  for (ElementId u : s.ids()) {
    if (protected_set.contains(u)) continue;
    Subset without = s.without(u);
    const double value_without = oracle.eval(without);
    if (current - value_without < 0.0) {
      s = std::move(without);
      current = value_without;
    }
  }
  return {std::move(s), current};
}

Subset Delete(const ValueOracle& oracle, const Subset& s) {
  return DeletePass(oracle, s, Subset(s.universe())).set;
}

RunTrace GreedyCardinality(const ValueOracle& oracle, int k) {
  const int n = oracle.n();
  CheckCardinality(n, k);
  const QueryClock clock(oracle);
  RunTrace trace;
  trace.algorithm = "greedy-card";
  trace.params.k = k;

  Subset s(n);
  double f_s = oracle.eval(s);
  trace.initial_value = f_s;
  for (int i = 1; i <= k; ++i) {
    RoundRecord round;
    round.index = i;
    CardinalityRound(oracle, Outside(s), s, f_s, round);
    round.cumulative_queries = clock.elapsed();
    trace.rounds.push_back(std::move(round));
  }
  trace.feasible = s.size() <= k;
  FinishTrace(trace, s, f_s, clock);
  return trace;
}

RunTrace SampleGreedyCardinality(const ValueOracle& oracle, int k, double epsilon,
                                 std::uint64_t seed) {
  const int n = oracle.n();
  CheckCardinality(n, k);
  CheckEpsilon(epsilon);
  const int r = SampleSize(n, k, epsilon);
  const QueryClock clock(oracle);
  RunTrace trace;
  trace.algorithm = "sample-greedy-card";
  trace.params.k = k;
  trace.params.epsilon = epsilon;
  trace.params.seed = seed;
  trace.params.sample_size = r;

  Rng rng(seed);
  Subset s(n);
  double f_s = oracle.eval(s);
  trace.initial_value = f_s;
  for (int i = 1; i <= k; ++i) {
    std::vector<ElementId> pool = Outside(s);
    std::vector<ElementId> candidates;
    if (static_cast<std::size_t>(r) >= pool.size()) {
      candidates = std::move(pool);
    } else {
      candidates = rng.sample_without_replacement(pool, static_cast<std::size_t>(r));
      std::sort(candidates.begin(), candidates.end());
    }
    RoundRecord round;
    round.index = i;
    CardinalityRound(oracle, candidates, s, f_s, round);
    round.cumulative_queries = clock.elapsed();
    trace.rounds.push_back(std::move(round));
  }
  trace.feasible = s.size() <= k;
  FinishTrace(trace, s, f_s, clock);
  return trace;
}

RunTrace GreedyMatroid(const ValueOracle& oracle, const Matroid& matroid, double epsilon) {
  const int n = oracle.n();
  if (matroid.n() != n) throw InvalidArgumentError("matroid ground set differs from the oracle's");
  CheckEpsilon(epsilon);
  const int k = matroid.rank();
  if (k < 1) throw InvalidParameterError("matroid rank must be >= 1");
  const int rounds = MatroidRounds(k, epsilon);
  const ExtendedMatroid em(matroid);
  const int universe = em.universe();

  const QueryClock clock(oracle);
  RunTrace trace;
  trace.algorithm = "greedy-matroid";
  trace.params.k = k;
  trace.params.epsilon = epsilon;
  trace.params.rounds_k = rounds;

  Subset s = em.dummy_base();
  Subset real(n);
  double f_s = oracle.eval(real);
  trace.initial_value = f_s;

  std::vector<double> weights(static_cast<std::size_t>(universe));
  std::vector<double> value_with(static_cast<std::size_t>(n));
  for (int i = 1; i <= rounds; ++i) {
    // Dummy marginals are zero by definition and cost nothing.
    std::fill(weights.begin(), weights.end(), 0.0);
    for (ElementId u = 0; u < n; ++u) {
      if (real.contains(u)) continue;
      value_with[static_cast<std::size_t>(u)] = oracle.eval(real.with(u));
      weights[static_cast<std::size_t>(u)] = value_with[static_cast<std::size_t>(u)] - f_s;
    }
    const Subset base = MaxWeightBase(em, weights, s);
    const ExchangeMap g = ExchangeBijection(em, base, s);

    ElementId best_in = -1;
    ElementId best_out = -1;
    double best_value = 0.0;
    for (const auto& [u, out] : g) {
      double value = 0.0;
      if (em.is_dummy(out)) {
        value = em.is_dummy(u) ? f_s : value_with[static_cast<std::size_t>(u)];
      } else {
        Subset swapped = real.without(out);
        if (!em.is_dummy(u)) swapped.insert(u);
        value = oracle.eval(swapped);
      }
      if (best_in < 0 || Improves(value, best_value)) {
        best_in = u;
        best_out = out;
        best_value = value;
      }
    }

    RoundRecord round;
    round.index = i;
    round.selected = best_in;
    round.swapped_out = best_out;
    s.erase(best_out);
    s.insert(best_in);
    real = em.real_part(s);
    round.before_delete = real.ids();
    DeleteResult cleaned = DeletePass(oracle, real, Subset(n), best_value);
    real = std::move(cleaned.set);
    f_s = cleaned.value;
    round.after_delete = real.ids();
    round.value = f_s;

    // Keep the dummies S already held, then top up to a base of size k.
    Subset next(universe);
    for (ElementId u : real.ids()) next.insert(u);
    int size = real.size();
    for (ElementId d = n; d < universe; ++d) {
      if (s.contains(d)) {
        next.insert(d);
        ++size;
      }
    }
    for (ElementId d = n; d < universe && size < k; ++d) {
      if (!next.contains(d)) {
        next.insert(d);
        ++size;
      }
    }
    s = std::move(next);
    round.cumulative_queries = clock.elapsed();
    trace.rounds.push_back(std::move(round));
  }
  trace.feasible = matroid.independent(real);
  FinishTrace(trace, real, f_s, clock);
  return trace;
}

RunTrace MwPacking(const ValueOracle& oracle, const PackingConstraint& packing, double epsilon,
                   const MwOptions& options) {
  if (packing.n() != oracle.n()) {
    throw InvalidArgumentError("packing matrix has " + std::to_string(packing.n()) +
                               " columns but the oracle has n = " + std::to_string(oracle.n()));
  }
  CheckEpsilon(epsilon);
  const double width = Width(packing);
  auto feasible = [&packing](const Subset& s) { return IsFeasible(Constraint{packing}, s); };
  return MwPackingImpl(oracle, packing.a, packing.b, Subset::Full(oracle.n()), width, epsilon,
                       options, feasible);
}

RunTrace MwPacking(const ValueOracle& oracle, const KnapsackConstraint& knapsack, double epsilon,
                   const MwOptions& options) {
  if (knapsack.n() != oracle.n()) {
    throw InvalidArgumentError("knapsack has " + std::to_string(knapsack.n()) +
                               " weights but the oracle has n = " + std::to_string(oracle.n()));
  }
  CheckEpsilon(epsilon);
  const NormalizedKnapsack normalized = NormalizeKnapsack(knapsack);
  std::optional<double> width;
  try {
    width = Width(normalized.packing);
  } catch (const UndefinedWidthError&) {
    // Only zero-weight elements survive: nothing is priced, lambda stays infinite.
  }
  const Constraint original{knapsack};
  auto feasible = [&original](const Subset& s) { return IsFeasible(original, s); };
  return MwPackingImpl(oracle, normalized.packing.a, normalized.packing.b, normalized.eligible,
                       width, epsilon, options, feasible);
}

RunTrace KnapsackEnum(const ValueOracle& oracle, const KnapsackConstraint& knapsack,
                      double epsilon) {
  const int n = oracle.n();
  if (knapsack.n() != n) {
    throw InvalidArgumentError("knapsack has " + std::to_string(knapsack.n()) +
                               " weights but the oracle has n = " + std::to_string(n));
  }
  CheckEpsilon(epsilon);
  const QueryClock clock(oracle);
  RunTrace trace;
  trace.algorithm = "knapsack-enum";
  trace.params.epsilon = epsilon;

  const auto& weights = knapsack.weights;
  auto weight = [&weights](ElementId j) { return weights[static_cast<std::size_t>(j)]; };
  std::vector<ElementId> eligible;
  for (ElementId j = 0; j < n; ++j) {
    if (weight(j) <= knapsack.budget) eligible.push_back(j);
  }

  std::vector<Subset> seeds;
  seeds.emplace_back(n);
  for (ElementId j : eligible) seeds.push_back(Subset::FromIds(n, std::vector<ElementId>{j}));
  for (std::size_t x = 0; x < eligible.size(); ++x) {
    for (std::size_t y = x + 1; y < eligible.size(); ++y) {
      if (weight(eligible[x]) + weight(eligible[y]) <= knapsack.budget) {
        seeds.push_back(Subset::FromIds(n, std::vector<ElementId>{eligible[x], eligible[y]}));
      }
    }
  }

  const Constraint original{knapsack};
  auto feasible = [&original](const Subset& s) { return IsFeasible(original, s); };

  Subset best(n);
  double best_value = 0.0;
  int index = 0;
  for (const Subset& seed : seeds) {
    const double seed_value = oracle.eval(seed);
    if (index == 0) {
      trace.initial_value = seed_value;
      best_value = seed_value;
    }

    double seed_weight = 0.0;
    double min_seed_weight = std::numeric_limits<double>::infinity();
    for (ElementId t : seed.ids()) {
      seed_weight += weight(t);
      min_seed_weight = std::min(min_seed_weight, weight(t));
    }
    const double residual = knapsack.budget - seed_weight;

    Subset candidates(n);
    double w_max = 0.0;
    for (ElementId j : eligible) {
      if (seed.contains(j) || weight(j) > min_seed_weight || weight(j) > residual) continue;
      candidates.insert(j);
      w_max = std::max(w_max, weight(j));
    }

    DeleteResult result{seed, seed_value};
    if (!candidates.empty()) {
      std::vector<std::vector<double>> a(1, std::vector<double>(static_cast<std::size_t>(n), 0.0));
      std::vector<double> b(1, 1.0);
      double lambda = std::numeric_limits<double>::infinity();
      if (w_max > 0.0) {
        for (ElementId j : candidates.ids()) a[0][static_cast<std::size_t>(j)] = weight(j) / w_max;
        b[0] = residual / w_max;
        // Width of the residual instance is b / max_j A_j = b.
        lambda = std::exp(epsilon * b[0]);
      }
      MwProblem problem;
      problem.a = &a;
      problem.b = &b;
      problem.candidates = candidates;
      problem.seed = seed;
      problem.seed_value = seed_value;
      problem.lambda = lambda;
      problem.feasible = feasible;
      result = RunMultiplicativeWeights(oracle, problem, clock, nullptr);
    }

    RoundRecord round;
    round.index = ++index;
    round.before_delete = seed.ids();
    round.after_delete = result.set.ids();
    round.value = result.value;
    round.cumulative_queries = clock.elapsed();
    trace.rounds.push_back(std::move(round));

    if (feasible(result.set) && result.value > best_value) {
      best = result.set;
      best_value = result.value;
    }
  }
  trace.feasible = feasible(best);
  FinishTrace(trace, best, best_value, clock);
  return trace;
}

// ---------------------------------------------------------------------------

int SampleSize(int n, int k, double epsilon) {
  CheckEpsilon(epsilon);
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  const double r = std::ceil(static_cast<double>(n) / k * std::log(1.0 / epsilon));
  if (r >= static_cast<double>(std::numeric_limits<int>::max())) return std::numeric_limits<int>::max();
  return static_cast<int>(r);
}

int MatroidRounds(int k, double epsilon) {
  CheckEpsilon(epsilon);
  if (k < 1) throw InvalidParameterError("rank must be >= 1");
  return static_cast<int>(std::ceil(k / 3.0 * std::log(1.0 / epsilon)));
}

double CardinalityGuarantee(int k) { return 0.5 * (1.0 - std::pow(1.0 - 2.0 / k, k)); }

double SampleGreedyGuarantee(double epsilon) {
  return 0.5 * (1.0 - std::exp(-2.0 * (1.0 - epsilon)));
}

double MatroidGuarantee(int k, int rounds) {
  return (1.0 - std::pow(1.0 - 3.0 / k, rounds)) / 3.0;
}

double PackingGuarantee(double epsilon) {
  return 0.5 * (1.0 - std::exp(-2.0 * (1.0 - 3.0 * epsilon)));
}

double PackingWidthThreshold(int m, double epsilon) {
  return std::max(std::log(static_cast<double>(m)), 1.0) / (epsilon * epsilon);
}

std::uint64_t GreedyCardinalityQueryBound(int n, int k) {
  return static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n + k + 2);
}

std::uint64_t SampleGreedyQueryBound(int r, int k) {
  return static_cast<std::uint64_t>(k) * (static_cast<std::uint64_t>(r) + k + 2);
}

std::uint64_t GreedyMatroidQueryBound(int n, int k, int rounds) {
  return static_cast<std::uint64_t>(rounds) * static_cast<std::uint64_t>(n + 2 * k + 2);
}

std::uint64_t MwPackingQueryBound(int n) {
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(2 * n + 2);
}

}  // namespace symsub
