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
#include <memory>
#include <optional>
#include <vector>

#include "hlrc/error.hpp"

namespace hlrc {

// Canonical integer encoding of a field element: the base-p digit expansion of
// its coefficient vector over GF(p), least significant digit = constant term.
// For prime fields this is the usual residue in [0, p).
using Elem = std::uint32_t;

// GF(p^e) with q = p^e capped at 2^20. Elements are canonical integers in
// [0, q). For q <= 2^16 multiplication runs on log/antilog tables keyed by the
// smallest generator; above that it falls back to polynomial arithmetic
// modulo the reduction polynomial.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;
  static constexpr std::uint32_t kMaxTableOrder = 1u << 16;

  // modulus: ascending coefficients of a monic irreducible of degree e over
  // GF(p) (length e+1). Ignored when e == 1. When absent and e > 1, the
  // canonically smallest monic irreducible of degree e is used.
  Field(std::uint32_t p, std::uint32_t e,
        std::optional<std::vector<Elem>> modulus = std::nullopt);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }

  // Reduction polynomial, ascending, length e+1. Empty for prime fields.
  const std::vector<Elem>& modulus() const { return modulus_; }

  // Structural equality: same (p, e, modulus).
  bool same_as(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  Elem add(Elem a, Elem b) const {
    check(a), check(b);
    if (e_ == 1) {
      Elem s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }

  Elem neg(Elem a) const {
    check(a);
    if (e_ == 1) return a == 0 ? 0 : q_ - a;
    if (p_ == 2) return a;
    return neg_digits(a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    check(a), check(b);
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return alog_[log_[a] + log_[b]];
    return mul_generic(a, b);
  }

  Elem inv(Elem a) const {
    check(a);
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (!log_.empty()) return alog_[(q_ - 1) - log_[a]];
    return inv_generic(a);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // x^m with m any integer; negative m inverts, 0^0 = 1, and 0^m for m < 0
  // raises DivisionByZero.
  Elem pow(Elem x, std::int64_t m) const;

  // All q elements in canonical order 0, 1, ..., q-1.
  std::vector<Elem> elements() const;

 private:
  void check(Elem a) const {
    if (a >= q_) fail(Errc::BadInput, "element out of range");
  }

  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;
  Elem mul_generic(Elem a, Elem b) const;
  Elem inv_generic(Elem a) const;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<Elem> modulus_;      // empty iff e == 1
  std::vector<std::uint32_t> log_;  // index: element; defined for 1..q-1
  std::vector<Elem> alog_;          // index: 0..2(q-2); alog_[i] = g^i
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<Elem>> modulus = std::nullopt);

}  // namespace hlrc
