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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hlrc/code.hpp"

namespace hlrc::fixtures {

// Runs fn and reports which library error it raised, if any.
template <typename Fn>
std::optional<Errc> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Reference instance over GF(19) with f = X^2, h = X^3: three totally split
// values, nests of six points in two sub-nests of three. All frozen numbers
// below were worked out by hand from the definitions, independently of the
// library code.

inline CodeInstance toy(std::int64_t s) {
  auto field = make_field(19, 1, {});
  Poly f = Poly::monomial(field, 1, 2);
  Poly h = Poly::monomial(field, 1, 3);
  return build_code(CodePlan{field, f, h, s, 2, 3});
}

inline const std::vector<Elem> kToySplitValues{1, 7, 11};

// Canonical coordinate order: split values ascending, sub-nests by h value
// ascending, points ascending.
inline const std::vector<Elem> kToyEvalPoints{1, 7,  11, 8,  12, 18, 2,  3, 14,
                                              5, 16, 17, 4,  6,  9,  10, 13, 15};

// Generator matrix of the s=1 instance: rows evaluate 1, X, X^3, X^6, X^7,
// X^9 at the eval points above.
inline const std::array<std::array<Elem, 18>, 6> kToyMatrix{{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 7, 11, 8, 12, 18, 2, 3, 14, 5, 16, 17, 4, 6, 9, 10, 13, 15},
    {1, 1, 1, 18, 18, 18, 8, 8, 8, 11, 11, 11, 7, 7, 7, 12, 12, 12},
    {1, 1, 1, 1, 1, 1, 7, 7, 7, 7, 7, 7, 11, 11, 11, 11, 11, 11},
    {1, 7, 11, 8, 12, 18, 14, 2, 3, 16, 17, 5, 6, 9, 4, 15, 10, 13},
    {1, 1, 1, 18, 18, 18, 18, 18, 18, 1, 1, 1, 1, 1, 1, 18, 18, 18},
}};

inline const char* kToyMatrixText =
    " 1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1\n"
    " 1  7 11  8 12 18  2  3 14  5 16 17  4  6  9 10 13 15\n"
    " 1  1  1 18 18 18  8  8  8 11 11 11  7  7  7 12 12 12\n"
    " 1  1  1  1  1  1  7  7  7  7  7  7 11 11 11 11 11 11\n"
    " 1  7 11  8 12 18 14  2  3 16 17  5  6  9  4 15 10 13\n"
    " 1  1  1 18 18 18 18 18 18  1  1  1  1  1  1 18 18 18\n";

// GF(64) instance with f = h = X^3: seven totally split values.
inline CodeInstance cube64(std::int64_t s) {
  auto field = make_field(2, 6, {});
  Poly f = Poly::monomial(field, 1, 3);
  Poly h = Poly::monomial(field, 1, 3);
  return build_code(CodePlan{field, f, h, s, 2, 7});
}

// First prime powers in canonical scan order, for axiom sweeps.
inline const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields{
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},  {2, 3}, {3, 2}, {11, 1}, {13, 1},
    {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5}};

}  // namespace hlrc::fixtures
