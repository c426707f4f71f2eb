/*
 * Copyright 2026 The hlrc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hlrc {

// xoshiro256** 1.0 (Blackman and Vigna), seeded through splitmix64 so any
// 64-bit seed yields a well-mixed state. Fixed constants, no library or
// platform dependence: the same seed gives the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64: golden-gamma increment 0x9E3779B97F4A7C15.
    std::uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased draw from [0, n) by rejection.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // j distinct values from [0, n), ascending, by Floyd's sampling.
  std::vector<std::uint64_t> distinct(std::uint64_t j, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    out.reserve(j);
    for (std::uint64_t t = n - j; t < n; ++t) {
      std::uint64_t r = bounded(t + 1);
      bool seen = false;
      for (std::uint64_t v : out) seen |= v == r;
      out.push_back(seen ? t : r);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
};

}  // namespace hlrc
