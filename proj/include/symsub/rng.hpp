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

#ifndef SYMSUB_RNG_HPP_
#define SYMSUB_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace symsub {

// Seeded generator with portable derived draws. std::mt19937_64's raw output
// is fully specified by the standard; the std:: distributions are not, so the
// uniform and bounded draws below are spelled out by hand. Any implementation
// of mt19937_64 plus these two mappings reproduces our instances bit-exactly.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  // Draws `count` distinct entries of `pool` (partial Fisher-Yates). The
  // result is in draw order; `pool` is permuted in place.
  template <typename T>
  std::vector<T> sample_without_replacement(std::vector<T>& pool, std::size_t count) {
    if (count > pool.size()) count = pool.size();
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    return std::vector<T>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symsub

#endif  // SYMSUB_RNG_HPP_
