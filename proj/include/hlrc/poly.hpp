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

#include <utility>
#include <vector>

#include "hlrc/gf.hpp"

namespace hlrc {

// Univariate polynomial over a fixed field. Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial has an empty
// coefficient vector and degree() == -1.
class Poly {
 public:
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
  static Poly constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }
  static Poly x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
  // c * X^n
  static Poly monomial(FieldPtr field, Elem c, std::size_t n);

  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elem c) const;
  bool operator==(const Poly& o) const;

  // Horner evaluation.
  Elem operator()(Elem x) const;

  // this(inner(X)).
  Poly compose(const Poly& inner) const;

  // Degree-(t-1) interpolant through t points with pairwise distinct
  // abscissae, by Lagrange bases in O(t^2).
  static Poly interpolate(FieldPtr field,
                          const std::vector<std::pair<Elem, Elem>>& points);

  // All roots in the field, ascending, found by exhaustive scan. Rejects the
  // zero polynomial.
  std::vector<Elem> distinct_roots() const;

 private:
  void normalize();
  void check_same_field(const Poly& o) const;

  FieldPtr field_;
  std::vector<Elem> c_;
};

}  // namespace hlrc
