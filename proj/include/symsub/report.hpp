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

#ifndef SYMSUB_REPORT_HPP_
#define SYMSUB_REPORT_HPP_

#include <optional>
#include <string>

#include "symsub/constraints.hpp"
#include "symsub/exact.hpp"
#include "symsub/io.hpp"
#include "symsub/oracle.hpp"
#include "symsub/trace.hpp"

namespace symsub {

struct RunReport {
  std::string instance_path;
  std::string instance_sha256;
  Constraint constraint;
  // trace.algorithm and trace.params carry the algorithm and its parameters.
  // When include_rounds is false, trace.rounds is empty.
  RunTrace trace;
  bool include_rounds = false;
  std::optional<ExactResult> exact;
  std::optional<double> wall_clock_ms;

  friend bool operator==(const RunReport& a, const RunReport& b);
};

Json ReportToJson(const RunReport& report);
// Throws MalformedInstanceError on schema errors. `n` binds the constraint.
RunReport ReportFromJson(const Json& j, int n);

Json TraceParamsToJson(const TraceParams& params);
Json RoundToJson(const RoundRecord& round);

Json ExactToJson(const ExactResult& exact);
Json ValidationToJson(const ValidationReport& report);

// Sidecar next to generated instances.
struct OptimumCertificate {
  double optimal_value = 0.0;
  IdList witness;
  std::string certified_by;  // "analytic" or "brute-force"
};

Json CertificateToJson(const OptimumCertificate& cert);

}  // namespace symsub

#endif  // SYMSUB_REPORT_HPP_
