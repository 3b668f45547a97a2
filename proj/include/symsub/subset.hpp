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

#ifndef SYMSUB_SUBSET_HPP_
#define SYMSUB_SUBSET_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace symsub {

using ElementId = int;
// Sorted, duplicate-free list of element ids. This is the set type exchanged
// across module boundaries.
using IdList = std::vector<ElementId>;

// Fixed-universe bitset over element ids 0..universe()-1.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe);

  // Throws InvalidSetError if an id is negative or >= universe.
  static Subset FromIds(int universe, std::span<const ElementId> ids);
  // Bit i of `mask` is element i. Requires universe <= 64.
  static Subset FromMask(int universe, std::uint64_t mask);
  static Subset Full(int universe);

  int universe() const { return universe_; }
  bool contains(ElementId u) const {
    return (words_[static_cast<std::size_t>(u) >> 6] >> (u & 63)) & 1U;
  }
  void insert(ElementId u) {
    words_[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
  }
  void erase(ElementId u) {
    words_[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }
  void set_mask(std::uint64_t mask);

  int size() const;
  bool empty() const { return size() == 0; }
  IdList ids() const;
  Subset complement() const;
  bool is_subset_of(const Subset& other) const;

  Subset with(ElementId u) const {
    Subset s = *this;
    s.insert(u);
    return s;
  }
  Subset without(ElementId u) const {
    Subset s = *this;
    s.erase(u);
    return s;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Converts an integer subset encoding to its id list.
IdList MaskToIds(std::uint64_t mask);

}  // namespace symsub

#endif  // SYMSUB_SUBSET_HPP_
