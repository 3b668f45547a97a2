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

#ifndef SYMSUB_MATCHING_HPP_
#define SYMSUB_MATCHING_HPP_

#include <vector>

namespace symsub {

// Maximum bipartite matching by repeated augmenting paths (Kuhn's method).
// adjacency[l] lists the right vertices adjacent to left vertex l; they are
// tried in the listed order, and left vertices are processed in index order,
// so the result is deterministic. Returns match[l] = right vertex or -1.
std::vector<int> MaxBipartiteMatching(const std::vector<std::vector<int>>& adjacency,
                                      int right_count);

}  // namespace symsub

#endif  // SYMSUB_MATCHING_HPP_
