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
#include <map>
#include <string>

#include "hlrc/code.hpp"

namespace hlrc {

// Relative frequencies of erasure events. scattered maps an erasure count j
// (at most d-1) to its weight.
struct EventMix {
  double single = 0;
  double lambda_subnest = 0;  // lambda erasures inside one sub-nest
  double lambda_nest = 0;     // lambda erasures inside one nest
  std::map<std::int64_t, double> scattered;
};

struct Scenario {
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;
  EventMix mix;
};

struct SimReport {
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> events;       // per event kind
  std::map<std::string, std::uint64_t> steps;        // per repair tier
  std::map<std::uint64_t, std::uint64_t> access_histogram;  // total access -> rounds
  std::uint64_t repaired_symbols = 0;
  std::uint64_t helper_accesses = 0;
  double mean_helpers_per_symbol = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool operator==(const SimReport&) const = default;
};

// Round r draws its own generator from seed ^ r, samples a random codeword,
// applies one erasure event from the mix, repairs, and verifies the round
// trip plus the per-tier access ceilings (b per sub-nest step, a per nest,
// k per global step). Failures are recorded, never thrown. Aggregation is
// order-independent, so any thread count yields the identical report.
SimReport simulate(const CodeInstance& c, const Scenario& sc, int jobs = 0);

}  // namespace hlrc
