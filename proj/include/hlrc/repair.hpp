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

struct ErasurePattern {
  std::vector<std::size_t> erased;  // ascending, unique, < n
};

ErasurePattern make_pattern(std::vector<std::size_t> coords, std::size_t n);

enum class Tier { Subnest, Nest, Global };

const char* tier_name(Tier t);

struct RepairStep {
  Tier tier = Tier::Subnest;
  std::vector<std::size_t> targets;  // erased coordinates this step recovers
  std::vector<std::size_t> helpers;  // surviving coordinates it reads
};

struct RepairPlan {
  std::vector<RepairStep> steps;
  std::size_t total_access = 0;  // distinct helpers across all steps
};

// Tier selection per nest: isolated erasures (at most one per sub-nest) use
// one sub-nest step each with its b surviving neighbours; a nest with a
// doubly-hit sub-nest but at most lambda erasures uses one nest step reading
// the a smallest surviving points of that nest; if any nest exceeds lambda,
// the whole pattern collapses to a single global step reading the first k
// independent surviving columns. Repairing more than d-1 erasures is refused.
RepairPlan plan_repair(const CodeInstance& c, const ErasurePattern& pattern);

// Executes the plan on a word whose erased positions are nullopt. Sub-nest
// and nest tiers interpolate inside the locality group; the global tier
// re-solves the message and rejects survivor sets that match no codeword.
std::vector<Elem> repair(const CodeInstance& c,
                         const std::vector<std::optional<Elem>>& word,
                         const ErasurePattern& pattern);

// True when every x-subset of the given columns is recoverable from the
// remaining ones, checked exhaustively; subset count above the cap is
// refused rather than sampled.
bool tolerance_check(const CodeInstance& c, const std::vector<std::size_t>& cols,
                     std::size_t x, std::uint64_t subset_cap = 1'000'000);

}  // namespace hlrc
