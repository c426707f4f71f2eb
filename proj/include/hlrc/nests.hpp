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

#include "hlrc/poly.hpp"

namespace hlrc {

// A value t0 is totally split for the pair (f, h) when f(h(X)) - t0 has
// exactly deg f * deg h distinct roots. Its fiber is one nest; within a nest,
// points sharing the same h-value form one sub-nest of size deg h.
struct SubNest {
  Elem h_value = 0;
  std::vector<Elem> points;  // ascending
};

struct Nest {
  Elem t0 = 0;
  std::vector<SubNest> subnests;  // ascending by h_value
};

struct NestSystem {
  FieldPtr field;
  Poly f, h;
  std::vector<Nest> nests;  // ascending by t0

  std::size_t ell() const { return nests.size(); }
  std::size_t points_per_nest() const;
};

// All totally split values in ascending canonical order, found by bucketing
// f(h(x)) over one pass through the field.
std::vector<Elem> split_values(const Poly& f, const Poly& h);

// Cross-checking variant: tests each candidate t0 independently by counting
// the distinct roots of f(h(X)) - t0.
std::vector<Elem> split_values_reference(const Poly& f, const Poly& h);

// Nest system over the first ell_requested split values. Raises
// NotEnoughNests (reporting the available count) when the field does not
// supply that many.
NestSystem build_nest_system(const Poly& f, const Poly& h, std::size_t ell_requested);

// Exact rational, reduced, denominator positive.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  double to_double() const { return (double)num / (double)den; }
};

Rational make_rational(__int128 num, __int128 den);

/// Lower estimate for the number of totally split values:
//   (q + 1 - 2 * genus * ceil(sqrt(q))) / (ord_gh^deg_f * ord_gf) - deg_f * deg_h / 2
// computed exactly over rationals. Galois group orders and the genus are
// caller-supplied; the estimate is advisory and often vacuous at small q.
struct SplitEstimate {
  std::uint64_t q = 0;
  std::uint32_t deg_f = 0, deg_h = 0;
  std::uint64_t ord_gf = 0, ord_gh = 0;
  std::uint64_t genus = 0;
  Rational lower_bound;
  bool vacuous = false;  // lower_bound <= 0
};

SplitEstimate chebotarev_estimate(std::uint64_t q, std::uint32_t deg_f, std::uint32_t deg_h,
                                  std::uint64_t ord_gf, std::uint64_t ord_gh,
                                  std::uint64_t genus);

}  // namespace hlrc
