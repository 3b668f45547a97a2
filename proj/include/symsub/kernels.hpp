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

// Data-parallel loops over all 2^n subsets. Each kernel has an OpenMP version
// and a serial reference with identical results; tests compare the two and
// bench/ measures the speedup.

#ifndef SYMSUB_KERNELS_HPP_
#define SYMSUB_KERNELS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "symsub/oracle.hpp"
#include "symsub/subset.hpp"

namespace symsub::kernels {

inline constexpr int kMaxEnumerationN = 24;

int MaxThreads();

// values[mask] = f(mask) for every mask in [0, 2^n). Requires n <= 24.
std::vector<double> TabulateSerial(const SetFunction& f);
std::vector<double> TabulateParallel(const SetFunction& f);

using SubsetPredicate = std::function<bool(const Subset&)>;

struct MaskArgmax {
  bool found = false;
  double value = 0.0;
  std::uint64_t mask = 0;
  std::uint64_t feasible_count = 0;
};

// Maximum of f over masks accepted by `feasible`; among equal values the
// smallest mask wins, so the parallel reduction matches the serial scan.
// `feasible` must be safe to call concurrently.
MaskArgmax BestFeasibleSerial(const SetFunction& f, const SubsetPredicate& feasible);
MaskArgmax BestFeasibleParallel(const SetFunction& f, const SubsetPredicate& feasible);

struct TableScan {
  std::uint64_t checks = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> listed;  // first ValidationReport::kMaxListed, mask order
};

// Non-negativity, symmetry and local submodularity over a full value table
// (table.size() == 2^n).
TableScan ScanTableSerial(int n, std::span<const double> table);
TableScan ScanTableParallel(int n, std::span<const double> table);

}  // namespace symsub::kernels

#endif  // SYMSUB_KERNELS_HPP_
