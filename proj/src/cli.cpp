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

#include "symsub/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symsub/algorithms.hpp"
#include "symsub/exact.hpp"
#include "symsub/generators.hpp"
#include "symsub/io.hpp"
#include "symsub/report.hpp"
#include "symsub/rng.hpp"

namespace symsub {

namespace {

namespace fs = std::filesystem;

struct LoadedInstance {
  std::string path;
  std::string sha256;
  std::shared_ptr<const SetFunction> function;
};

LoadedInstance LoadInstance(const std::string& path) {
  const std::string text = ReadTextFile(path);
  return {path, Sha256Hex(text), ParseInstance(ParseJsonText(text, path))};
}

Constraint LoadConstraint(const std::optional<std::string>& path, std::optional<int> k, int n) {
  if (path) return ParseConstraint(ParseJsonText(ReadTextFile(*path), *path), n);
  if (k) return CardinalityConstraint{*k};
  throw UsageError("either --constraint or --k is required");
}

std::string FormatNumber(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", x);
  return buffer;
}

const Matroid* AsMatroid(const Constraint& c) { return std::get_if<Matroid>(&c); }

// Cardinality k, or the capacity of a uniform matroid.
std::optional<int> CardinalityOf(const Constraint& c) {
  if (const auto* cc = std::get_if<CardinalityConstraint>(&c)) return cc->k;
  if (const Matroid* m = AsMatroid(c); m != nullptr && m->kind() == Matroid::Kind::kUniform) {
    return m->uniform_k();
  }
  return std::nullopt;
}

// "k" column for bench rows: cardinality or matroid rank.
std::optional<int> KOf(const Constraint& c) {
  if (auto k = CardinalityOf(c)) return k;
  if (const Matroid* m = AsMatroid(c)) return m->rank();
  return std::nullopt;
}

std::string SidecarPath(const std::string& instance_path) {
  const std::string suffix = ".json";
  if (instance_path.size() > suffix.size() &&
      instance_path.compare(instance_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return instance_path.substr(0, instance_path.size() - suffix.size()) + ".opt.json";
  }
  return instance_path + ".opt.json";
}

// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string instance;
  std::optional<std::string> constraint;
  std::optional<int> k;
  std::string algorithm;
  SolverParams params;
  bool trace = false;
  bool exact = false;
  bool timing = false;
  std::string out;
};

int CmdSolve(const SolveOptions& opt, std::ostream& err) {
  const LoadedInstance inst = LoadInstance(opt.instance);
  const Constraint constraint = LoadConstraint(opt.constraint, opt.k, inst.function->n());
  const ValueOracle oracle(inst.function);

  const auto start = std::chrono::steady_clock::now();
  RunTrace trace = RunAlgorithm(opt.algorithm, oracle, constraint, opt.params);
  const auto stop = std::chrono::steady_clock::now();
  if (trace.total_queries != oracle.query_count()) {
    throw InternalInvariantError("trace query total differs from the oracle counter");
  }

  RunReport report;
  report.instance_path = inst.path;
  report.instance_sha256 = inst.sha256;
  report.constraint = constraint;
  report.include_rounds = opt.trace;
  if (!opt.trace) trace.rounds.clear();
  report.trace = std::move(trace);
  if (opt.exact) report.exact = BruteForceOpt(*inst.function, constraint);
  if (opt.timing) {
    report.wall_clock_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  WriteTextFile(opt.out, DumpJson(ReportToJson(report)));
  for (const std::string& w : report.trace.warnings) err << "warning: " << w << "\n";
  if (!report.trace.feasible) {
    err << "error: solver returned an infeasible set\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int CmdExact(const std::string& instance_path, const std::optional<std::string>& constraint_path,
             std::optional<int> k, const std::string& out) {
  const LoadedInstance inst = LoadInstance(instance_path);
  const Constraint constraint = LoadConstraint(constraint_path, k, inst.function->n());
  const ExactResult exact = BruteForceOpt(*inst.function, constraint);
  Json j;
  j["instance"] = Json{{"path", inst.path}, {"sha256", inst.sha256}};
  j["constraint"] = ConstraintToJson(constraint);
  const Json exact_json = ExactToJson(exact);
  for (const auto& [key, value] : exact_json.items()) j[key] = value;
  WriteTextFile(out, DumpJson(j));
  return kExitOk;
}

int CmdVerify(const std::string& instance_path, bool exhaustive, int trials, std::uint64_t seed,
              const std::optional<std::string>& out, std::ostream& err) {
  const LoadedInstance inst = LoadInstance(instance_path);
  const ValidationReport report = exhaustive ? ValidateExhaustive(*inst.function)
                                             : ValidateSampled(*inst.function, trials, seed);
  if (out) WriteTextFile(*out, DumpJson(ValidationToJson(report)));
  if (report.valid()) return kExitOk;
  err << report.violation_count << " violation(s) found";
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    err << "; first: " << ToString(v.kind) << " at S=" << Json(v.s).dump();
  }
  err << "\n";
  return kExitViolations;
}

struct BenchRow {
  std::string instance;
  std::string algorithm;
  int n = 0;
  std::optional<int> k;
  double value = 0.0;
  std::optional<double> opt;
  std::uint64_t queries = 0;
  double millis = 0.0;
  std::string error;
};

int CmdBench(const std::string& manifest_path, const std::string& out, std::ostream& err) {
  const Json manifest = ParseJsonText(ReadTextFile(manifest_path), manifest_path);
  if (!manifest.contains("runs") || !manifest.at("runs").is_array()) {
    throw MalformedInstanceError("manifest needs a \"runs\" array");
  }
  const fs::path base = fs::path(manifest_path).parent_path();
  auto resolve = [&base](const std::string& p) {
    const fs::path path(p);
    return (path.is_absolute() ? path : base / path).string();
  };

  struct Task {
    LoadedInstance instance;
    Constraint constraint;
    std::string algorithm;
    SolverParams params;
    bool exact = false;
  };
  std::vector<Task> tasks;
  for (const Json& run : manifest.at("runs")) {
    try {
      Task task;
      task.instance = LoadInstance(resolve(run.at("instance").get<std::string>()));
      std::optional<std::string> constraint_path;
      std::optional<int> k;
      if (run.contains("constraint")) constraint_path = resolve(run.at("constraint").get<std::string>());
      if (run.contains("k")) k = run.at("k").get<int>();
      task.constraint = LoadConstraint(constraint_path, k, task.instance.function->n());
      task.algorithm = run.at("algorithm").get<std::string>();
      task.params.epsilon = run.value("epsilon", task.params.epsilon);
      task.params.seed = run.value("seed", task.params.seed);
      if (run.contains("lambda_override")) task.params.lambda_override = run.at("lambda_override").get<double>();
      task.exact = run.value("exact", false);
      // Keep the path as written in the manifest for the CSV.
      task.instance.path = run.at("instance").get<std::string>();
      tasks.push_back(std::move(task));
    } catch (const Json::exception& e) {
      throw MalformedInstanceError(std::string("manifest entry: ") + e.what());
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  // Each task owns its oracle context, so tasks run independently; rows keep
  // manifest order regardless of completion order.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    BenchRow& row = rows[i];
    row.instance = task.instance.path;
    row.algorithm = task.algorithm;
    row.n = task.instance.function->n();
    row.k = KOf(task.constraint);
    try {
      const ValueOracle oracle(task.instance.function);
      const auto start = std::chrono::steady_clock::now();
      const RunTrace trace = RunAlgorithm(task.algorithm, oracle, task.constraint, task.params);
      const auto stop = std::chrono::steady_clock::now();
      row.value = trace.final_value;
      row.queries = trace.total_queries;
      row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
      if (task.exact) row.opt = BruteForceOpt(*task.instance.function, task.constraint).opt_value;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  std::ostringstream csv;
  csv << "instance,algorithm,n,k,value,opt,ratio,queries,millis\n";
  int status = kExitOk;
  for (const BenchRow& row : rows) {
    if (!row.error.empty()) {
      err << "error: " << row.instance << " / " << row.algorithm << ": " << row.error << "\n";
      status = kExitInputError;
      continue;
    }
    csv << row.instance << ',' << row.algorithm << ',' << row.n << ','
        << (row.k ? std::to_string(*row.k) : "") << ',' << FormatNumber(row.value) << ',';
    if (row.opt) {
      csv << FormatNumber(*row.opt) << ',';
      csv << (*row.opt == 0.0 ? std::string("vacuous") : FormatNumber(row.value / *row.opt));
    } else {
      csv << ',';
    }
    csv << ',' << row.queries << ',' << FormatNumber(row.millis) << '\n';
  }
  WriteTextFile(out, csv.str());
  return status;
}

int CmdTightExample(int k, const std::string& out) {
  const TightExample ex = MakeTightExample(k);
  Json instance = GraphToJson(ex.graph);
  instance["generator"] = Json{{"name", "tight-example"}, {"k", k}, {"c", ex.c}};
  OptimumCertificate cert;
  if (ex.graph.n <= kMaxBruteForceN) {
    const ExactResult exact =
        BruteForceOpt(GraphCutFunction(ex.graph), Constraint{CardinalityConstraint{k}});
    cert = {exact.opt_value, exact.witness, "brute-force"};
  } else {
    // f(o_i) = 1 for each i and the o_i have pairwise disjoint edge sets, so
    // f(O) = k; no set of k vertices can cut more than the k heaviest stars.
    cert = {ex.optimal_value, ex.o_ids, "analytic"};
  }
  WriteTextFile(out, DumpJson(instance));
  WriteTextFile(SidecarPath(out), DumpJson(CertificateToJson(cert)));
  return kExitOk;
}

struct GenerateOptions {
  std::string kind = "graph";
  int n = 10;
  double edge_prob = 0.5;
  int edges = 10;
  int max_arity = 3;
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t seed = 0;
  std::string out;
};

int CmdGenerate(const GenerateOptions& opt) {
  Json instance;
  if (opt.kind == "graph") {
    instance = GraphToJson(RandomGraph(opt.n, opt.edge_prob, {opt.lo, opt.hi}, opt.seed));
    instance["generator"] = Json{{"name", "random-graph"}, {"prng", Rng::kName},
                                 {"seed", opt.seed}, {"edge_prob", opt.edge_prob},
                                 {"weight_range", {opt.lo, opt.hi}}};
  } else if (opt.kind == "hypergraph") {
    instance = HypergraphToJson(
        RandomHypergraph(opt.n, opt.edges, opt.max_arity, {opt.lo, opt.hi}, opt.seed));
    instance["generator"] = Json{{"name", "random-hypergraph"}, {"prng", Rng::kName},
                                 {"seed", opt.seed}, {"num_edges", opt.edges},
                                 {"max_arity", opt.max_arity}, {"weight_range", {opt.lo, opt.hi}}};
  } else {
    throw UsageError("--kind must be graph or hypergraph");
  }
  WriteTextFile(opt.out, DumpJson(instance));
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------

RunTrace RunAlgorithm(const std::string& algorithm, const ValueOracle& oracle,
                      const Constraint& constraint, const SolverParams& params) {
  const std::string type(ConstraintTypeName(constraint));
  auto incompatible = [&]() {
    return UsageError("algorithm " + algorithm + " cannot run on a " + type + " constraint");
  };
  if (algorithm == "greedy-card" || algorithm == "sample-greedy-card") {
    const std::optional<int> k = CardinalityOf(constraint);
    if (!k) throw incompatible();
    return algorithm == "greedy-card"
               ? GreedyCardinality(oracle, *k)
               : SampleGreedyCardinality(oracle, *k, params.epsilon, params.seed);
  }
  if (algorithm == "greedy-matroid") {
    if (const Matroid* m = AsMatroid(constraint)) return GreedyMatroid(oracle, *m, params.epsilon);
    if (const auto* cc = std::get_if<CardinalityConstraint>(&constraint)) {
      return GreedyMatroid(oracle, Matroid::Uniform(oracle.n(), cc->k), params.epsilon);
    }
    throw incompatible();
  }
  if (algorithm == "mw-packing") {
    const MwOptions options{params.lambda_override};
    if (const auto* p = std::get_if<PackingConstraint>(&constraint)) {
      return MwPacking(oracle, *p, params.epsilon, options);
    }
    if (const auto* kc = std::get_if<KnapsackConstraint>(&constraint)) {
      return MwPacking(oracle, *kc, params.epsilon, options);
    }
    throw incompatible();
  }
  if (algorithm == "knapsack-enum") {
    if (const auto* kc = std::get_if<KnapsackConstraint>(&constraint)) {
      return KnapsackEnum(oracle, *kc, params.epsilon);
    }
    throw incompatible();
  }
  throw UsageError("unknown algorithm \"" + algorithm + "\"");
}

int RunCli(const std::vector<std::string>& args, std::ostream& err) {
  CLI::App app{"Symmetric submodular maximization toolkit"};
  app.require_subcommand(1);

  SolveOptions solve;
  std::optional<double> solve_epsilon;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a solver and write a report");
  solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--constraint", solve.constraint, "Constraint file");
  solve_cmd->add_option("--k", solve.k, "Cardinality k (instead of --constraint)");
  solve_cmd->add_option("--algorithm", solve.algorithm,
                        "greedy-card | sample-greedy-card | greedy-matroid | mw-packing | knapsack-enum")
      ->required();
  solve_cmd->add_option("--epsilon", solve_epsilon, "Accuracy parameter in (0,1)");
  solve_cmd->add_option("--seed", solve.params.seed, "Seed for sample-greedy-card");
  solve_cmd->add_option("--lambda-override", solve.params.lambda_override,
                        "Use this lambda instead of exp(eps W) for mw-packing");
  solve_cmd->add_flag("--trace", solve.trace, "Include the per-round trace");
  solve_cmd->add_flag("--exact", solve.exact, "Add the brute-force optimum and ratio");
  solve_cmd->add_flag("--timing", solve.timing, "Record wall-clock time in the report");
  solve_cmd->add_option("--out", solve.out, "Report file")->required();

  std::string exact_instance;
  std::optional<std::string> exact_constraint;
  std::optional<int> exact_k;
  std::string exact_out;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Brute-force optimum (n <= 24)");
  exact_cmd->add_option("--instance", exact_instance, "Instance file")->required();
  exact_cmd->add_option("--constraint", exact_constraint, "Constraint file");
  exact_cmd->add_option("--k", exact_k, "Cardinality k (instead of --constraint)");
  exact_cmd->add_option("--out", exact_out, "Report file")->required();

  std::string verify_instance;
  bool verify_exhaustive = false;
  int verify_trials = 1000;
  std::uint64_t verify_seed = 0;
  std::optional<std::string> verify_out;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check non-negativity, symmetry and submodularity");
  verify_cmd->add_option("--instance", verify_instance, "Instance file")->required();
  verify_cmd->add_flag("--exhaustive", verify_exhaustive, "Check every subset (n <= 20)");
  verify_cmd->add_option("--trials", verify_trials, "Sampled trials");
  verify_cmd->add_option("--seed", verify_seed, "Sampling seed");
  verify_cmd->add_option("--out", verify_out, "Validation report file");

  std::string bench_manifest;
  std::string bench_out;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a manifest of solver runs, write CSV");
  bench_cmd->add_option("--manifest", bench_manifest, "Manifest file")->required();
  bench_cmd->add_option("--out", bench_out, "CSV file")->required();

  int tight_k = 0;
  std::string tight_out;
  CLI::App* tight_cmd =
      app.add_subcommand("tight-example", "Write the worst-case greedy instance and its optimum");
  tight_cmd->add_option("--k", tight_k, "Cardinality k >= 3")->required();
  tight_cmd->add_option("--out", tight_out, "Instance file; sidecar goes to <stem>.opt.json")
      ->required();

  GenerateOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a random graph or hypergraph instance");
  gen_cmd->add_option("--kind", gen.kind, "graph | hypergraph");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability (graph)");
  gen_cmd->add_option("--edges", gen.edges, "Hyperedge count (hypergraph)");
  gen_cmd->add_option("--max-arity", gen.max_arity, "Maximum hyperedge size (hypergraph)");
  gen_cmd->add_option("--lo", gen.lo, "Minimum weight");
  gen_cmd->add_option("--hi", gen.hi, "Maximum weight");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Instance file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    const int code = app.exit(e, out, err);
    std::cout << out.str();
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) {
      if (solve_epsilon) solve.params.epsilon = *solve_epsilon;
      return CmdSolve(solve, err);
    }
    if (exact_cmd->parsed()) return CmdExact(exact_instance, exact_constraint, exact_k, exact_out);
    if (verify_cmd->parsed()) {
      return CmdVerify(verify_instance, verify_exhaustive, verify_trials, verify_seed, verify_out,
                       err);
    }
    if (bench_cmd->parsed()) return CmdBench(bench_manifest, bench_out, err);
    if (tight_cmd->parsed()) return CmdTightExample(tight_k, tight_out);
    if (gen_cmd->parsed()) return CmdGenerate(gen);
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace symsub
