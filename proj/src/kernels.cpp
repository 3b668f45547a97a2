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

#include "symsub/kernels.hpp"

#include <cmath>
#include <string>

#include "symsub/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symsub::kernels {

namespace {

std::int64_t SubsetCount(int n) {
  if (n < 0 || n > kMaxEnumerationN) {
    throw InstanceTooLargeError("subset enumeration supports n <= " +
                                std::to_string(kMaxEnumerationN) + ", got " +
                                std::to_string(n));
  }
  return std::int64_t{1} << n;
}

int ThreadId() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Strictly better under (value desc, mask asc).
bool Better(double value, std::uint64_t mask, const MaskArgmax& best) {
  if (!best.found) return true;
  if (value != best.value) return value > best.value;
  return mask < best.mask;
}

void Merge(MaskArgmax& into, const MaskArgmax& part) {
  if (part.found && Better(part.value, part.mask, into)) {
    into.found = true;
    into.value = part.value;
    into.mask = part.mask;
  }
  into.feasible_count += part.feasible_count;
}

// Checks performed for a single mask; appends to `out` and bumps counters.
void ScanMask(int n, std::span<const double> table, std::uint64_t mask, TableScan& out) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const double f_s = table[mask];
  auto record = [&out](Violation v) {
    ++out.violation_count;
    if (out.listed.size() < ValidationReport::kMaxListed) out.listed.push_back(std::move(v));
  };

  ++out.checks;
  if (f_s < -kCheckTolerance) {
    record({ViolationKind::kNegative, MaskToIds(mask), {}, -1, {f_s}});
  }
  const std::uint64_t comp = full & ~mask;
  if (mask < comp) {
    ++out.checks;
    if (std::abs(f_s - table[comp]) > kCheckTolerance) {
      record({ViolationKind::kAsymmetric, MaskToIds(mask), {}, -1, {f_s, table[comp]}});
    }
  }
  // f(S+u) + f(S+v) >= f(S+u+v) + f(S) for u < v outside S.
  for (int u = 0; u < n; ++u) {
    const std::uint64_t bu = std::uint64_t{1} << u;
    if (mask & bu) continue;
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t bv = std::uint64_t{1} << v;
      if (mask & bv) continue;
      ++out.checks;
      const double gain_small = table[mask | bu] - f_s;
      const double gain_large = table[mask | bu | bv] - table[mask | bv];
      if (gain_small < gain_large - kCheckTolerance) {
        record({ViolationKind::kNotSubmodular, MaskToIds(mask), MaskToIds(mask | bv), u,
                {gain_small, gain_large}});
      }
    }
  }
}

void CheckTable(int n, std::span<const double> table) {
  if (table.size() != static_cast<std::size_t>(SubsetCount(n))) {
    throw MalformedInstanceError("value table size does not match 2^n");
  }
}

}  // namespace

int MaxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> TabulateSerial(const SetFunction& f) {
  const std::int64_t count = SubsetCount(f.n());
  std::vector<double> values(static_cast<std::size_t>(count));
  Subset s(f.n());
  for (std::int64_t mask = 0; mask < count; ++mask) {
    s.set_mask(static_cast<std::uint64_t>(mask));
    values[static_cast<std::size_t>(mask)] = f.value(s);
  }
  return values;
}

std::vector<double> TabulateParallel(const SetFunction& f) {
  const std::int64_t count = SubsetCount(f.n());
  std::vector<double> values(static_cast<std::size_t>(count));
#pragma omp parallel
  {
    Subset s(f.n());
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < count; ++mask) {
      s.set_mask(static_cast<std::uint64_t>(mask));
      values[static_cast<std::size_t>(mask)] = f.value(s);
    }
  }
  return values;
}

MaskArgmax BestFeasibleSerial(const SetFunction& f, const SubsetPredicate& feasible) {
  const std::int64_t count = SubsetCount(f.n());
  MaskArgmax best;
  Subset s(f.n());
  for (std::int64_t m = 0; m < count; ++m) {
    const auto mask = static_cast<std::uint64_t>(m);
    s.set_mask(mask);
    if (!feasible(s)) continue;
    ++best.feasible_count;
    const double value = f.value(s);
    if (Better(value, mask, best)) {
      best.found = true;
      best.value = value;
      best.mask = mask;
    }
  }
  return best;
}

MaskArgmax BestFeasibleParallel(const SetFunction& f, const SubsetPredicate& feasible) {
  const std::int64_t count = SubsetCount(f.n());
  std::vector<MaskArgmax> partial(static_cast<std::size_t>(MaxThreads()));
#pragma omp parallel
  {
    MaskArgmax local;
    Subset s(f.n());
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < count; ++m) {
      const auto mask = static_cast<std::uint64_t>(m);
      s.set_mask(mask);
      if (!feasible(s)) continue;
      ++local.feasible_count;
      const double value = f.value(s);
      if (Better(value, mask, local)) {
        local.found = true;
        local.value = value;
        local.mask = mask;
      }
    }
    partial[static_cast<std::size_t>(ThreadId())] = local;
  }
  MaskArgmax best;
  for (const MaskArgmax& p : partial) Merge(best, p);
  return best;
}

TableScan ScanTableSerial(int n, std::span<const double> table) {
  CheckTable(n, table);
  TableScan out;
  const std::uint64_t count = table.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) ScanMask(n, table, mask, out);
  return out;
}

TableScan ScanTableParallel(int n, std::span<const double> table) {
  CheckTable(n, table);
  const auto count = static_cast<std::int64_t>(table.size());
  std::vector<TableScan> partial(static_cast<std::size_t>(MaxThreads()));
#pragma omp parallel
  {
    TableScan local;
    // Static schedule hands each thread one contiguous block in thread order,
    // so concatenating by thread id preserves mask order.
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < count; ++mask) {
      ScanMask(n, table, static_cast<std::uint64_t>(mask), local);
    }
    partial[static_cast<std::size_t>(ThreadId())] = std::move(local);
  }
  TableScan out;
  for (TableScan& p : partial) {
    out.checks += p.checks;
    out.violation_count += p.violation_count;
    for (Violation& v : p.listed) {
      if (out.listed.size() >= ValidationReport::kMaxListed) break;
      out.listed.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace symsub::kernels
