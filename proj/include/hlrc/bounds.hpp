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
#include <vector>

#include "hlrc/matrix.hpp"

namespace hlrc {

struct CodeInstance;

// Parameters of an [n, k] code with two-level locality: any single erasure is
// repairable from b helpers inside its sub-nest, and up to lambda erasures in
// one nest are repairable from a helpers inside that nest.
struct HlrcParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t b = 0;
  std::int64_t a = 0;
  std::int64_t lambda = 0;
};

// Raises InvalidParams unless 2 <= lambda <= b, (b+1) | (a+lambda),
// (a+lambda) | n, and 0 < k < n.
void validate_params(const HlrcParams& p);

// rho = b(a+lambda)/(b+1) - (lambda-1), the largest message-size step that one
// nest can contribute. Exact integer arithmetic; validates its own inputs.
std::int64_t rho(std::int64_t a, std::int64_t b, std::int64_t lambda);

struct BoundReport {
  std::int64_t rho = 0;
  std::int64_t k1 = 0;              // (k-1) mod rho
  std::int64_t d_max_hlrc = 0;      // distance ceiling under two-level locality
  std::int64_t d_max_classical = 0; // single-level ceiling n - k - ceil(k/b) + 2
  std::optional<bool> optimal;      // set when a concrete distance was supplied
};

// d_max_hlrc = n - (floor((k-1)/rho)(a+lambda) + k1 + floor(k1/b)).
BoundReport hlrc_bound(const HlrcParams& p);

// True when d attains the two-level ceiling.
bool is_optimal(const HlrcParams& p, std::int64_t d);

// If the selected columns of a full-row-rank generator matrix have rank at
// most k-1, every codeword is determined outside them, so d <= n - |cols|;
// returns that bound, or nullopt when the columns have full rank k.
std::optional<std::int64_t> singleton_certificate(const Matrix& g,
                                                  const std::vector<std::size_t>& cols);

// Column set built from whole nests, then whole sub-nests, then a partial
// sub-nest, sized so its rank cannot exceed k-1; certifying it shows the
// instance's distance meets d_max_hlrc exactly.
std::vector<std::size_t> build_deficient_set(const CodeInstance& c);

}  // namespace hlrc
