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

#include "symsub/matching.hpp"

#include <algorithm>

namespace symsub {

namespace {

bool TryAugment(int left, const std::vector<std::vector<int>>& adjacency,
                std::vector<char>& visited, std::vector<int>& match_left,
                std::vector<int>& match_right) {
  for (int right : adjacency[static_cast<std::size_t>(left)]) {
    auto r = static_cast<std::size_t>(right);
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_right[r] < 0 ||
        TryAugment(match_right[r], adjacency, visited, match_left, match_right)) {
      match_left[static_cast<std::size_t>(left)] = right;
      match_right[r] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> MaxBipartiteMatching(const std::vector<std::vector<int>>& adjacency,
                                      int right_count) {
  std::vector<int> match_left(adjacency.size(), -1);
  std::vector<int> match_right(static_cast<std::size_t>(right_count), -1);
  std::vector<char> visited(static_cast<std::size_t>(right_count));
  for (std::size_t left = 0; left < adjacency.size(); ++left) {
    std::fill(visited.begin(), visited.end(), 0);
    TryAugment(static_cast<int>(left), adjacency, visited, match_left, match_right);
  }
  return match_left;
}

}  // namespace symsub
