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

#include "symsub/report.hpp"

#include <cmath>
#include <limits>

#include "symsub/errors.hpp"

namespace symsub {

namespace {

// JSON has no infinity; an unbounded lambda is written as the string "inf".
Json NumberOrInf(double x) {
  if (std::isinf(x) && x > 0) return "inf";
  return x;
}

double ParseNumberOrInf(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

template <typename T>
void ReadOptional(const Json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

RoundRecord RoundFromJson(const Json& j) {
  RoundRecord r;
  r.index = j.at("index").get<int>();
  r.selected = j.value("selected", -1);
  r.swapped_out = j.value("swapped_out", -1);
  r.before_delete = j.at("before_delete").get<IdList>();
  r.after_delete = j.at("after_delete").get<IdList>();
  r.value = j.at("value").get<double>();
  r.cumulative_queries = j.at("cumulative_queries").get<std::uint64_t>();
  ReadOptional(j, "price", r.price);
  ReadOptional(j, "beta_before", r.beta_before);
  return r;
}

TraceParams ParamsFromJson(const Json& j) {
  TraceParams p;
  ReadOptional(j, "k", p.k);
  ReadOptional(j, "epsilon", p.epsilon);
  if (j.contains("lambda")) p.lambda = ParseNumberOrInf(j.at("lambda"));
  p.lambda_overridden = j.value("lambda_override", false);
  ReadOptional(j, "seed", p.seed);
  ReadOptional(j, "K", p.rounds_k);
  ReadOptional(j, "r", p.sample_size);
  ReadOptional(j, "width", p.width);
  return p;
}

}  // namespace

bool operator==(const RunReport& a, const RunReport& b) {
  auto same_exact = [](const std::optional<ExactResult>& x, const std::optional<ExactResult>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->opt_value == y->opt_value && x->witness == y->witness &&
           x->sets_enumerated == y->sets_enumerated;
  };
  return a.instance_path == b.instance_path && a.instance_sha256 == b.instance_sha256 &&
         a.constraint == b.constraint && a.trace == b.trace &&
         a.include_rounds == b.include_rounds && same_exact(a.exact, b.exact) &&
         a.wall_clock_ms == b.wall_clock_ms;
}

Json TraceParamsToJson(const TraceParams& p) {
  Json j = Json::object();
  if (p.k) j["k"] = *p.k;
  if (p.epsilon) j["epsilon"] = *p.epsilon;
  if (p.lambda) j["lambda"] = NumberOrInf(*p.lambda);
  if (p.lambda_overridden) j["lambda_override"] = true;
  if (p.seed) j["seed"] = *p.seed;
  if (p.rounds_k) j["K"] = *p.rounds_k;
  if (p.sample_size) j["r"] = *p.sample_size;
  if (p.width) j["width"] = *p.width;
  return j;
}

Json RoundToJson(const RoundRecord& r) {
  Json j{{"index", r.index}};
  if (r.selected >= 0) j["selected"] = r.selected;
  if (r.swapped_out >= 0) j["swapped_out"] = r.swapped_out;
  j["before_delete"] = r.before_delete;
  j["after_delete"] = r.after_delete;
  j["value"] = r.value;
  j["cumulative_queries"] = r.cumulative_queries;
  if (r.price) j["price"] = *r.price;
  if (r.beta_before) j["beta_before"] = *r.beta_before;
  return j;
}

Json ExactToJson(const ExactResult& exact) {
  return Json{{"opt_value", exact.opt_value},
              {"witness", exact.witness},
              {"sets_enumerated", exact.sets_enumerated}};
}

Json ReportToJson(const RunReport& report) {
  const RunTrace& t = report.trace;
  Json j;
  j["instance"] = Json{{"path", report.instance_path}, {"sha256", report.instance_sha256}};
  j["constraint"] = ConstraintToJson(report.constraint);
  j["algorithm"] = t.algorithm;
  j["params"] = TraceParamsToJson(t.params);
  j["initial_set"] = t.initial_set;
  j["initial_value"] = t.initial_value;
  j["final_set"] = t.final_set;
  j["final_value"] = t.final_value;
  j["total_queries"] = t.total_queries;
  j["feasible"] = t.feasible;
  j["warnings"] = t.warnings;
  if (report.exact) {
    Json e = ExactToJson(*report.exact);
    if (report.exact->opt_value == 0.0) {
      e["ratio"] = "vacuous";
    } else {
      e["ratio"] = t.final_value / report.exact->opt_value;
    }
    j["exact"] = std::move(e);
  }
  if (report.include_rounds) {
    Json rounds = Json::array();
    for (const RoundRecord& r : t.rounds) rounds.push_back(RoundToJson(r));
    j["rounds"] = std::move(rounds);
  }
  if (report.wall_clock_ms) j["wall_clock_ms"] = *report.wall_clock_ms;
  return j;
}

RunReport ReportFromJson(const Json& j, int n) {
  try {
    RunReport report;
    report.instance_path = j.at("instance").at("path").get<std::string>();
    report.instance_sha256 = j.at("instance").at("sha256").get<std::string>();
    report.constraint = ParseConstraint(j.at("constraint"), n);
    RunTrace& t = report.trace;
    t.algorithm = j.at("algorithm").get<std::string>();
    t.params = ParamsFromJson(j.at("params"));
    t.initial_set = j.at("initial_set").get<IdList>();
    t.initial_value = j.at("initial_value").get<double>();
    t.final_set = j.at("final_set").get<IdList>();
    t.final_value = j.at("final_value").get<double>();
    t.total_queries = j.at("total_queries").get<std::uint64_t>();
    t.feasible = j.at("feasible").get<bool>();
    t.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("exact")) {
      const Json& e = j.at("exact");
      report.exact = ExactResult{e.at("opt_value").get<double>(), e.at("witness").get<IdList>(),
                                 e.at("sets_enumerated").get<std::uint64_t>()};
    }
    if (j.contains("rounds")) {
      report.include_rounds = true;
      for (const Json& r : j.at("rounds")) t.rounds.push_back(RoundFromJson(r));
    }
    ReadOptional(j, "wall_clock_ms", report.wall_clock_ms);
    return report;
  } catch (const Json::exception& e) {
    throw MalformedInstanceError(std::string("report: ") + e.what());
  }
}

Json ValidationToJson(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry{{"kind", std::string(ToString(v.kind))}, {"S", v.s}};
    if (v.kind == ViolationKind::kNotSubmodular) {
      entry["T"] = v.t;
      entry["u"] = v.u;
    }
    entry["values"] = v.values;
    violations.push_back(std::move(entry));
  }
  return Json{{"valid", report.valid()},
              {"mode", report.mode},
              {"checks", report.checks},
              {"violation_count", report.violation_count},
              {"violations", std::move(violations)}};
}

Json CertificateToJson(const OptimumCertificate& cert) {
  return Json{{"optimal_value", cert.optimal_value},
              {"witness", cert.witness},
              {"certified_by", cert.certified_by}};
}

}  // namespace symsub
