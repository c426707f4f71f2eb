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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlrc/code.hpp"

namespace hlrc {

enum class ScanMode {
  // Full scan when the message count is small; above full_scan_limit the scan
  // may stop once the designed distance is witnessed, which is exact as long
  // as the degree argument guarantees no lighter codeword exists.
  Auto,
  // Always scan every message, trusting no formula.
  Paranoid,
};

struct DistanceOptions {
  ScanMode mode = ScanMode::Auto;
  std::uint64_t full_scan_limit = 10'000'000;
  std::uint64_t cap = 100'000'000;  // hard ceiling on scanned messages
  int jobs = 0;                     // 0 = library default thread count
};

struct DistanceResult {
  std::int64_t d = 0;
  bool exact = false;       // every nonzero message was scanned
  bool early_exit = false;  // stopped at a designed-distance witness
  std::uint64_t scanned = 0;  // only meaningful for full scans
};

// Minimum codeword weight by message-space enumeration in lexicographic
// canonical order. Each step updates the running evaluation vector
// incrementally and recounts the evaluation points where the message
// polynomial vanishes (weight = n - roots). designed_d < 0 disables early
// exit. Raises TooLarge instead of scanning past the cap.
DistanceResult exact_distance(const Matrix& g, std::int64_t designed_d,
                              const DistanceOptions& opt = {});

DistanceResult exact_distance(const CodeInstance& c, const DistanceOptions& opt = {});

// Independent slow route for cross-checks: re-encodes every message from
// scratch and takes the minimum Hamming weight. Refuses more than 2^24
// messages.
std::int64_t exact_distance_reference(const Matrix& g);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckItem> checks;
  std::optional<std::int64_t> exact_d;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Structural audit of one instance: parameter formulas, basis degrees,
// generator and locality-block ranks, erasure tolerances, distance
// optimality, the rank-deficiency certificate, and (within the enumeration
// budget) the exact distance.
VerifyReport verify_instance(const CodeInstance& c, const DistanceOptions& opt = {});

}  // namespace hlrc
