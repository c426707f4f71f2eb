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
#include <vector>

#include "hlrc/bounds.hpp"
#include "hlrc/matrix.hpp"
#include "hlrc/nests.hpp"

namespace hlrc {

// Recipe for one code: evaluate the message space spanned by
//   X^u * h(X)^j * f(h(X))^i
// at every point of ell nests, where i <= s, j <= deg f - 1, and u stays
// below deg h - 1 except in the top h-power branch, where it stays below
// deg h - lambda.
struct CodePlan {
  FieldPtr field;
  Poly f, h;
  std::int64_t s = 0;       // highest power of f(h(X)); s + 1 <= ell
  std::int64_t lambda = 2;  // nest-level erasure budget, 2 <= lambda <= deg h - 1
  std::int64_t ell = 1;     // number of nests
};

void validate_plan(const CodePlan& plan);

struct BasisMonomial {
  std::int64_t i = 0;      // power of f(h(X))
  std::int64_t j = 0;      // power of h(X)
  std::int64_t u = 0;      // power of X
  bool top_branch = false; // true in the degree-trimmed branch j = deg f - 1

  std::int64_t total_degree(std::int64_t deg_f, std::int64_t deg_h) const {
    return u + j * deg_h + i * deg_f * deg_h;
  }
};

// Deterministic basis order: i ascending; within each i the j < deg f - 1
// branch first (j ascending, u ascending), then the top branch (u ascending).
std::vector<BasisMonomial> enumerate_basis(const CodePlan& plan);

struct CodeInstance {
  CodePlan plan;
  NestSystem nest_system;
  std::vector<Elem> eval_points;     // nest-major, sub-nest-major, points ascending
  std::vector<BasisMonomial> basis;  // k rows
  Matrix g;                          // k x n generator matrix
  HlrcParams params;
  std::int64_t d = 0;    // designed distance n - delta
  std::int64_t delta = 0;

  std::size_t n() const { return (std::size_t)params.n; }
  std::size_t k() const { return (std::size_t)params.k; }
  std::size_t nest_size() const { return (std::size_t)(params.a + params.lambda); }
  std::size_t subnest_size() const { return (std::size_t)(params.b + 1); }
  std::size_t nest_of(std::size_t coord) const { return coord / nest_size(); }
  std::size_t subnest_of(std::size_t coord) const {
    return (coord % nest_size()) / subnest_size();
  }
  std::vector<std::size_t> nest_coords(std::size_t nest) const;
  std::vector<std::size_t> subnest_coords(std::size_t nest, std::size_t sub) const;
};

CodeInstance build_code(const CodePlan& plan);

// message . G
std::vector<Elem> encode(const CodeInstance& c, const std::vector<Elem>& message);

// The message-space polynomial with the given basis coefficients; its
// evaluations at eval_points are exactly encode(c, message).
Poly message_poly(const CodeInstance& c, const std::vector<Elem>& message);

}  // namespace hlrc
