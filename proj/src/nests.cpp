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

#include "hlrc/nests.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <unordered_map>

namespace hlrc {
namespace {

void check_pair(const Poly& f, const Poly& h) {
  if (!f.field().same_as(h.field()))
    fail(Errc::FieldMismatch, "f and h live in different fields");
  if (f.degree() < 1) fail(Errc::ConstantPolynomial, "outer polynomial f is constant");
  if (h.degree() < 1) fail(Errc::ConstantPolynomial, "inner polynomial h is constant");
}

std::uint64_t ceil_sqrt(std::uint64_t q) {
  auto r = (std::uint64_t)std::sqrt((double)q);
  while (r * r > q) --r;
  while (r * r < q) ++r;
  return r;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::size_t NestSystem::points_per_nest() const {
  return (std::size_t)f.degree() * (std::size_t)h.degree();
}

std::vector<Elem> split_values(const Poly& f, const Poly& h) {
  check_pair(f, h);
  const Field& F = f.field();
  const std::size_t target = (std::size_t)f.degree() * (std::size_t)h.degree();
  std::vector<std::uint32_t> fiber_size(F.q(), 0);
  for (Elem x = 0; x < F.q(); ++x) ++fiber_size[f(h(x))];
  std::vector<Elem> out;
  for (Elem t = 0; t < F.q(); ++t)
    if (fiber_size[t] == target) out.push_back(t);
  return out;
}

std::vector<Elem> split_values_reference(const Poly& f, const Poly& h) {
  check_pair(f, h);
  const Field& F = f.field();
  const Poly fh = f.compose(h);
  const std::size_t target = (std::size_t)f.degree() * (std::size_t)h.degree();
  const Elem q = F.q();
  std::vector<char> split(q, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (Elem t = 0; t < q; ++t) {
    const Poly shifted = fh - Poly::constant(f.field_ptr(), t);
    split[t] = shifted.distinct_roots().size() == target;
  }
  std::vector<Elem> out;
  for (Elem t = 0; t < q; ++t)
    if (split[t]) out.push_back(t);
  return out;
}

NestSystem build_nest_system(const Poly& f, const Poly& h, std::size_t ell_requested) {
  check_pair(f, h);
  if (ell_requested < 1) fail(Errc::BadInput, "at least one nest is required");
  const Field& F = f.field();
  const std::size_t df = (std::size_t)f.degree();
  const std::size_t dh = (std::size_t)h.degree();

  std::vector<Elem> t0s = split_values(f, h);
  if (t0s.size() < ell_requested)
    fail(Errc::NotEnoughNests, "requested " + std::to_string(ell_requested) + " nests, only " +
                                   std::to_string(t0s.size()) + " split values available");
  t0s.resize(ell_requested);

  std::unordered_map<Elem, std::size_t> nest_of;
  for (std::size_t i = 0; i < t0s.size(); ++i) nest_of.emplace(t0s[i], i);

  // (h(x), x) pairs per nest; sorting groups sub-nests by ascending h-value
  // with ascending points inside each.
  std::vector<std::vector<std::pair<Elem, Elem>>> fibers(t0s.size());
  for (Elem x = 0; x < F.q(); ++x) {
    Elem hx = h(x);
    auto it = nest_of.find(f(hx));
    if (it != nest_of.end()) fibers[it->second].emplace_back(hx, x);
  }

  NestSystem sys{f.field_ptr(), f, h, {}};
  sys.nests.reserve(t0s.size());
  for (std::size_t i = 0; i < t0s.size(); ++i) {
    auto& fiber = fibers[i];
    assert(fiber.size() == df * dh);
    std::sort(fiber.begin(), fiber.end());
    Nest nest{t0s[i], {}};
    for (std::size_t g = 0; g < df; ++g) {
      SubNest sn{fiber[g * dh].first, {}};
      for (std::size_t j = 0; j < dh; ++j) {
        assert(fiber[g * dh + j].first == sn.h_value);
        sn.points.push_back(fiber[g * dh + j].second);
      }
      nest.subnests.push_back(std::move(sn));
    }
    sys.nests.push_back(std::move(nest));
  }
  return sys;
}

Rational make_rational(__int128 num, __int128 den) {
  assert(den != 0);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

SplitEstimate chebotarev_estimate(std::uint64_t q, std::uint32_t deg_f, std::uint32_t deg_h,
                                  std::uint64_t ord_gf, std::uint64_t ord_gh,
                                  std::uint64_t genus) {
  if (q < 2 || deg_f < 1 || deg_h < 1 || ord_gf < 1 || ord_gh < 1)
    fail(Errc::BadInput, "estimate requires positive parameters");

  // kLimit * max uint64 stays below the signed 128-bit ceiling, so the
  // overflow check can run after the multiply.
  constexpr __int128 kLimit = (__int128)1 << 62;
  __int128 den = ord_gf;
  for (std::uint32_t i = 0; i < deg_f; ++i) {
    if (den > kLimit) fail(Errc::TooLarge, "group order product too large");
    den *= (__int128)ord_gh;
  }
  if (den > kLimit) fail(Errc::TooLarge, "group order product too large");

  // (q + 1 - 2g*ceil(sqrt q)) / den - deg_f*deg_h / 2, over a common
  // denominator 2*den. Rounding the square root up keeps the bound
  // conservative.
  __int128 num = (__int128)q + 1 - 2 * (__int128)genus * (__int128)ceil_sqrt(q);
  __int128 dd = (__int128)deg_f * deg_h;
  Rational lb = make_rational(2 * num - den * dd, 2 * den);

  SplitEstimate est;
  est.q = q;
  est.deg_f = deg_f;
  est.deg_h = deg_h;
  est.ord_gf = ord_gf;
  est.ord_gh = ord_gh;
  est.genus = genus;
  est.lower_bound = lb;
  est.vacuous = lb.num <= 0;
  return est;
}

}  // namespace hlrc
