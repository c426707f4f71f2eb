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

#include <doctest.h>

#include "fixtures.hpp"
#include "hlrc/bounds.hpp"

using namespace hlrc;
using fixtures::error_code_of;

TEST_SUITE("bounds") {
  TEST_CASE("rho") {
    CHECK(rho(4, 2, 2) == 3);
    CHECK(rho(7, 2, 2) == 5);
    CHECK(rho(10, 3, 2) == 8);
    CHECK(error_code_of([] { rho(5, 2, 2); }) == Errc::InvalidParams);
    CHECK(error_code_of([] { rho(4, 2, 1); }) == Errc::InvalidParams);
    CHECK(error_code_of([] { rho(4, 2, 3); }) == Errc::InvalidParams);
  }

  TEST_CASE("parameter validation") {
    validate_params({18, 6, 2, 4, 2});
    CHECK(error_code_of([] { validate_params({18, 6, 2, 5, 2}); }) == Errc::InvalidParams);
    CHECK(error_code_of([] { validate_params({20, 6, 2, 4, 2}); }) == Errc::InvalidParams);
    CHECK(error_code_of([] { validate_params({18, 18, 2, 4, 2}); }) == Errc::InvalidParams);
    CHECK(error_code_of([] { validate_params({18, 0, 2, 4, 2}); }) == Errc::InvalidParams);
    CHECK(error_code_of([] { validate_params({18, 6, -2, 4, 2}); }) == Errc::InvalidParams);
  }

  TEST_CASE("reference bound values") {
    BoundReport r = hlrc_bound({18, 6, 2, 4, 2});
    CHECK(r.rho == 3);
    CHECK(r.k1 == 2);
    CHECK(r.d_max_hlrc == 9);
    CHECK(r.d_max_classical == 11);
    CHECK(!r.optimal.has_value());

    // k=1 puts no locality pressure at all: both ceilings reach n.
    BoundReport one = hlrc_bound({18, 1, 2, 4, 2});
    CHECK(one.d_max_hlrc == 18);
    CHECK(one.d_max_classical == 18);

    CHECK(is_optimal({18, 6, 2, 4, 2}, 9));
    CHECK(!is_optimal({18, 6, 2, 4, 2}, 8));
  }

  TEST_CASE("bound sweep is n minus a constant") {
    // With k=6, a=4, b=2, lambda=2 the deduction is 1 whole nest (6), plus
    // k1=2 spare coordinates, plus 1 helper column: 9 exactly, never 8.
    for (std::int64_t n = 12; n <= 120; n += 6) {
      BoundReport r = hlrc_bound({n, 6, 2, 4, 2});
      REQUIRE(r.d_max_hlrc == n - 9);
      REQUIRE(r.d_max_classical == n - 7);
      REQUIRE(r.d_max_hlrc <= r.d_max_classical);
    }
  }

  TEST_CASE("two-level ceiling never beats the classical one") {
    for (std::int64_t b = 2; b <= 6; ++b)
      for (std::int64_t lambda = 2; lambda <= b; ++lambda)
        for (std::int64_t m = 1; m <= 6; ++m) {
          std::int64_t a = m * (b + 1) - lambda;
          if (a < 1) continue;
          std::int64_t size = a + lambda;
          std::int64_t n = 4 * size;
          std::int64_t r = rho(a, b, lambda);
          REQUIRE(r >= 1);
          REQUIRE(r <= a);
          for (std::int64_t k = 1; k < n && k <= 3 * r; ++k) {
            BoundReport rep = hlrc_bound({n, k, b, a, lambda});
            REQUIRE(rep.d_max_hlrc <= rep.d_max_classical);
            REQUIRE(rep.d_max_hlrc >= 1);
            // Larger k never loosens the ceiling.
            if (k > 1) REQUIRE(rep.d_max_hlrc <= hlrc_bound({n, k - 1, b, a, lambda}).d_max_hlrc);
          }
        }
  }

  TEST_CASE("rank certificate on the reference instance") {
    CodeInstance c1 = fixtures::toy(1);
    auto cols = build_deficient_set(c1);
    CHECK(cols.size() == 9);
    auto cert = singleton_certificate(c1.g, cols);
    REQUIRE(cert.has_value());
    CHECK(*cert == 9);

    CodeInstance c0 = fixtures::toy(0);
    auto cols0 = build_deficient_set(c0);
    CHECK(cols0.size() == 3);
    auto cert0 = singleton_certificate(c0.g, cols0);
    REQUIRE(cert0.has_value());
    CHECK(*cert0 == 15);

    // Full-rank column sets certify nothing.
    std::vector<std::size_t> all(c1.n());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(!singleton_certificate(c1.g, all).has_value());

    // A rank-deficient "generator" is rejected outright.
    Matrix bad(c1.g.field_ptr(), 2, 6);
    for (std::size_t col = 0; col < 6; ++col) {
      bad.at(0, col) = 1;
      bad.at(1, col) = 1;
    }
    CHECK(error_code_of([&] { singleton_certificate(bad, {0, 1}); }) ==
          Errc::RankDeficientGenerator);
  }
}
