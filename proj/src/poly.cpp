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

#include "hlrc/poly.hpp"

#include <algorithm>

namespace hlrc {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) fail(Errc::BadInput, "polynomial requires a field");
  for (Elem c : c_)
    if (c >= field_->q()) fail(Errc::BadInput, "coefficient out of range");
  normalize();
}

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (!field_->same_as(*o.field_))
    fail(Errc::FieldMismatch, "operands live in different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(o);
  std::vector<Elem> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  check_same_field(o);
  std::vector<Elem> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<Elem> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scale(Elem c) const {
  std::vector<Elem> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], c);
  return Poly(field_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  return field_->same_as(*o.field_) && c_ == o.c_;
}

Elem Poly::operator()(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  check_same_field(inner);
  Poly acc = zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * inner + constant(field_, c_[i]);
  return acc;
}

Poly Poly::interpolate(FieldPtr field,
                       const std::vector<std::pair<Elem, Elem>>& points) {
  if (!field) fail(Errc::BadInput, "interpolation requires a field");
  const std::size_t t = points.size();
  if (t == 0) fail(Errc::EmptyInput, "no interpolation points");
  {
    std::vector<Elem> xs(t);
    for (std::size_t i = 0; i < t; ++i) xs[i] = points[i].first;
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
      fail(Errc::DuplicateAbscissa, "repeated interpolation abscissa");
  }
  const Field& F = *field;

  // Full node polynomial N(X) = prod (X - x_i), then each Lagrange basis is
  // N(X)/(X - x_i) by synthetic division, scaled by y_i / N'(x_i).
  std::vector<Elem> node{1};
  for (const auto& [x, y] : points) {
    (void)y;
    std::vector<Elem> next(node.size() + 1, 0);
    Elem mx = F.neg(x);
    for (std::size_t i = 0; i < node.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], node[i]);
      next[i] = F.add(next[i], F.mul(node[i], mx));
    }
    node = std::move(next);
  }

  std::vector<Elem> acc(t, 0);
  std::vector<Elem> quot(t);
  for (const auto& [x, y] : points) {
    // Deflate the node polynomial at root x: quot has degree t-1.
    Elem carry = node[t];
    for (std::size_t i = t; i-- > 0;) {
      quot[i] = carry;
      carry = F.add(node[i], F.mul(carry, x));
    }
    Elem denom = 0;  // quot(x) = N'(x)
    for (std::size_t i = t; i-- > 0;) denom = F.add(F.mul(denom, x), quot[i]);
    Elem s = F.div(y, denom);
    for (std::size_t i = 0; i < t; ++i)
      acc[i] = F.add(acc[i], F.mul(s, quot[i]));
  }
  return Poly(field, std::move(acc));
}

std::vector<Elem> Poly::distinct_roots() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "every element is a root");
  std::vector<Elem> roots;
  for (Elem x = 0; x < field_->q(); ++x)
    if ((*this)(x) == 0) roots.push_back(x);
  return roots;
}

}  // namespace hlrc
