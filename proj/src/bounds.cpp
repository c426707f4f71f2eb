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

#include "hlrc/bounds.hpp"

#include <string>

#include "hlrc/code.hpp"

namespace hlrc {

void validate_params(const HlrcParams& p) {
  if (p.n <= 0 || p.k <= 0 || p.b <= 0 || p.a <= 0 || p.lambda <= 0)
    fail(Errc::InvalidParams, "parameters must be positive");
  if (p.lambda < 2 || p.lambda > p.b)
    fail(Errc::InvalidParams, "lambda must satisfy 2 <= lambda <= b");
  if ((p.a + p.lambda) % (p.b + 1) != 0)
    fail(Errc::InvalidParams, "(b+1) must divide (a+lambda)");
  if (p.n % (p.a + p.lambda) != 0)
    fail(Errc::InvalidParams, "(a+lambda) must divide n");
  if (p.k >= p.n) fail(Errc::InvalidParams, "k must be smaller than n");
}

std::int64_t rho(std::int64_t a, std::int64_t b, std::int64_t lambda) {
  if (a <= 0 || b <= 0 || lambda < 2 || lambda > b)
    fail(Errc::InvalidParams, "rho requires a, b > 0 and 2 <= lambda <= b");
  if ((a + lambda) % (b + 1) != 0)
    fail(Errc::InvalidParams, "(b+1) must divide (a+lambda); got " + std::to_string(b + 1) +
                                  " and " + std::to_string(a + lambda));
  return b * ((a + lambda) / (b + 1)) - (lambda - 1);
}

BoundReport hlrc_bound(const HlrcParams& p) {
  validate_params(p);
  BoundReport r;
  r.rho = rho(p.a, p.b, p.lambda);
  r.k1 = (p.k - 1) % r.rho;
  std::int64_t spent = ((p.k - 1) / r.rho) * (p.a + p.lambda) + r.k1 + r.k1 / p.b;
  r.d_max_hlrc = p.n - spent;
  r.d_max_classical = p.n - p.k - (p.k + p.b - 1) / p.b + 2;
  return r;
}

bool is_optimal(const HlrcParams& p, std::int64_t d) {
  return hlrc_bound(p).d_max_hlrc == d;
}

std::optional<std::int64_t> singleton_certificate(const Matrix& g,
                                                  const std::vector<std::size_t>& cols) {
  if (g.rank() != g.rows())
    fail(Errc::RankDeficientGenerator, "generator matrix does not have full row rank");
  if (g.select_columns(cols).rank() <= g.rows() - 1)
    return (std::int64_t)g.cols() - (std::int64_t)cols.size();
  return std::nullopt;
}

std::vector<std::size_t> build_deficient_set(const CodeInstance& c) {
  const BoundReport r = hlrc_bound(c.params);
  const std::size_t per_nest = (std::size_t)(c.params.a + c.params.lambda);
  const std::size_t per_subnest = (std::size_t)(c.params.b + 1);
  const std::size_t whole_nests = (std::size_t)((c.params.k - 1) / r.rho);
  const std::size_t whole_subnests = (std::size_t)(r.k1 / c.params.b);
  const std::size_t partial = (std::size_t)(r.k1 % c.params.b);

  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < whole_nests * per_nest; ++i) cols.push_back(i);
  std::size_t base = whole_nests * per_nest;
  for (std::size_t i = 0; i < whole_subnests * per_subnest + partial; ++i)
    cols.push_back(base + i);
  return cols;
}

}  // namespace hlrc
