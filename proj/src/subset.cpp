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

#include "symsub/subset.hpp"

#include <bit>
#include <string>

#include "symsub/errors.hpp"

namespace symsub {

namespace {

std::size_t WordCount(int universe) {
  return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

Subset::Subset(int universe) : universe_(universe) {
  if (universe < 0) throw InvalidSetError("negative universe size");
  words_.assign(WordCount(universe), 0);
}

Subset Subset::FromIds(int universe, std::span<const ElementId> ids) {
  Subset s(universe);
  for (ElementId u : ids) {
    if (u < 0 || u >= universe) {
      throw InvalidSetError("element id " + std::to_string(u) +
                            " outside ground set of size " +
                            std::to_string(universe));
    }
    s.insert(u);
  }
  return s;
}

Subset Subset::FromMask(int universe, std::uint64_t mask) {
  Subset s(universe);
  s.set_mask(mask);
  return s;
}

Subset Subset::Full(int universe) {
  Subset s(universe);
  for (ElementId u = 0; u < universe; ++u) s.insert(u);
  return s;
}

void Subset::set_mask(std::uint64_t mask) {
  if (universe_ > 64) throw InvalidSetError("mask encoding needs universe <= 64");
  if (universe_ < 64 && (mask >> universe_) != 0) {
    throw InvalidSetError("mask has bits outside the ground set");
  }
  if (!words_.empty()) words_[0] = mask;
}

int Subset::size() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

IdList Subset::ids() const {
  IdList out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<ElementId>(wi * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

Subset Subset::complement() const {
  Subset c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  const int tail = universe_ & 63;
  if (tail != 0) c.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return c;
}

bool Subset::is_subset_of(const Subset& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

IdList MaskToIds(std::uint64_t mask) {
  IdList out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace symsub
