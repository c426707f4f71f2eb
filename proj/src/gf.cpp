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

#include "hlrc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hlrc {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u32 p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (u32 d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::vector<u32> prime_factors(u32 m) {
  std::vector<u32> out;
  for (u32 d = 2; (u64)d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Dense coefficient vectors over Z_p, ascending degree, not normalized.
using ZpPoly = std::vector<u32>;

int zp_degree(const ZpPoly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a by monic b.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, u32 p) {
  int db = zp_degree(b);
  for (int da = zp_degree(a); da >= db; da = zp_degree(a)) {
    u32 c = a[da];
    int shift = da - db;
    for (int i = 0; i <= db; ++i) {
      u64 t = (u64)c * b[i] % p;
      a[i + shift] = (a[i + shift] + p - (u32)t) % p;
    }
  }
  a.resize(db > 0 ? db : 1, 0);
  return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, u32 p) {
  ZpPoly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (u32)((prod[i + j] + (u64)a[i] * b[j]) % p);
  }
  return zp_mod(std::move(prod), m, p);
}

u64 zp_encode(const ZpPoly& a, u32 p) {
  u64 v = 0;
  for (int i = (int)a.size() - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

ZpPoly zp_decode(u64 v, u32 p, u32 len) {
  ZpPoly a(len, 0);
  for (u32 i = 0; i < len; ++i) {
    a[i] = (u32)(v % p);
    v /= p;
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2. Returns a
// nontrivial monic factor if one exists.
std::optional<ZpPoly> zp_find_factor(const ZpPoly& a, u32 p) {
  int deg = zp_degree(a);
  for (int d = 1; 2 * d <= deg; ++d) {
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (u64 v = 0; v < count; ++v) {
      ZpPoly div = zp_decode(v, p, d + 1);
      div[d] = 1;
      if (zp_degree(zp_mod(a, div, p)) < 0) return div;
    }
  }
  return std::nullopt;
}

std::string zp_to_string(const ZpPoly& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

}  // namespace

Field::Field(u32 p, u32 e, std::optional<std::vector<Elem>> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) fail(Errc::BadInput, "extension degree must be at least 1");

  u64 q = 1;
  for (u32 i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder)
      fail(Errc::CapacityExceeded,
           "field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^20");
  }
  q_ = (u32)q;

  if (e_ > 1) {
    if (modulus) {
      const auto& m = *modulus;
      if (m.size() != e_ + 1 || m[e_] != 1)
        fail(Errc::BadInput, "modulus must be monic of degree " + std::to_string(e_));
      for (Elem c : m)
        if (c >= p_) fail(Errc::BadInput, "modulus coefficient out of range");
      if (auto factor = zp_find_factor(m, p_))
        fail(Errc::Reducible, "modulus has factor " + zp_to_string(*factor));
      modulus_ = m;
    } else {
      // Smallest canonical encoding first: scan the non-leading digits in
      // ascending integer order under a fixed leading 1.
      for (u64 v = 0;; ++v) {
        ZpPoly cand = zp_decode(v, p_, e_ + 1);
        cand[e_] = 1;
        if (!zp_find_factor(cand, p_)) {
          modulus_.assign(cand.begin(), cand.end());
          break;
        }
      }
    }
  }

  if (q_ <= kMaxTableOrder && q_ > 2) build_tables();
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (u32 i = 0; i < e_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::neg_digits(Elem a) const {
  Elem out = 0, scale = 1;
  for (u32 i = 0; i < e_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

Elem Field::mul_generic(Elem a, Elem b) const {
  if (e_ == 1) return (Elem)((u64)a * b % p_);
  ZpPoly pa = zp_decode(a, p_, e_);
  ZpPoly pb = zp_decode(b, p_, e_);
  ZpPoly m(modulus_.begin(), modulus_.end());
  return (Elem)zp_encode(zp_mulmod(pa, pb, m, p_), p_);
}

Elem Field::inv_generic(Elem a) const {
  // a^(q-2) = a^-1 for a != 0.
  Elem r = 1, base = a;
  u64 m = q_ - 2;
  while (m) {
    if (m & 1) r = mul_generic(r, base);
    base = mul_generic(base, base);
    m >>= 1;
  }
  return r;
}

Elem Field::pow(Elem x, std::int64_t m) const {
  check(x);
  if (m == 0) return 1;
  if (x == 0) {
    if (m < 0) fail(Errc::DivisionByZero, "negative power of zero");
    return 0;
  }
  bool invert = m < 0;
  u64 mm = invert ? (u64)(-m) : (u64)m;
  mm %= q_ - 1;  // x^(q-1) = 1 for x != 0
  Elem r = 1, base = x;
  while (mm) {
    if (mm & 1) r = mul(r, base);
    base = mul(base, base);
    mm >>= 1;
  }
  return invert ? inv(r) : r;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void Field::build_tables() {
  const u32 n = q_ - 1;
  const auto factors = prime_factors(n);
  auto pow_raw = [&](Elem x, u32 m) {
    Elem r = 1, base = x;
    while (m) {
      if (m & 1) r = mul_generic(r, base);
      base = mul_generic(base, base);
      m >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (u32 r : factors)
      if (pow_raw(cand, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }

  alog_.resize(2 * n - 1);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (u32 i = 0; i < n; ++i) {
    alog_[i] = cur;
    log_[cur] = i;
    cur = mul_generic(cur, g);
  }
  for (u32 i = n; i < 2 * n - 1; ++i) alog_[i] = alog_[i - n];
}

FieldPtr make_field(u32 p, u32 e, std::optional<std::vector<Elem>> modulus) {
  return std::make_shared<const Field>(p, e, std::move(modulus));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::Reducible: return "Reducible";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::NotEnoughNests: return "NotEnoughNests";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RankDeficientGenerator: return "RankDeficientGenerator";
    case Errc::BadInput: return "BadInput";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::TooManyErasures: return "TooManyErasures";
    case Errc::InconsistentWord: return "InconsistentWord";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

bool errc_is_validation(Errc c) {
  switch (c) {
    case Errc::DivisionByZero:
    case Errc::TooManyErasures:
    case Errc::InconsistentWord:
    case Errc::TooLarge:
      return false;
    default:
      return true;
  }
}

}  // namespace hlrc
