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

#include "hlrc/code.hpp"

#include <numeric>
#include <string>

namespace hlrc {

void validate_plan(const CodePlan& plan) {
  if (!plan.field) fail(Errc::InvalidPlan, "plan requires a field");
  if (!plan.f.field().same_as(*plan.field) || !plan.h.field().same_as(*plan.field))
    fail(Errc::FieldMismatch, "f and h must live in the plan's field");
  if (plan.f.degree() < 2) fail(Errc::InvalidPlan, "deg f must be at least 2");
  if (plan.h.degree() < 3) fail(Errc::InvalidPlan, "deg h must be at least 3");
  if (plan.lambda < 2 || plan.lambda > plan.h.degree() - 1)
    fail(Errc::InvalidPlan, "lambda must satisfy 2 <= lambda <= deg h - 1");
  if (plan.s < 0) fail(Errc::InvalidPlan, "s must be non-negative");
  if (plan.ell < 1) fail(Errc::InvalidPlan, "at least one nest is required");
  if (plan.s + 1 > plan.ell)
    fail(Errc::InvalidPlan, "s + 1 = " + std::to_string(plan.s + 1) + " exceeds ell = " +
                                std::to_string(plan.ell));
}

std::vector<BasisMonomial> enumerate_basis(const CodePlan& plan) {
  validate_plan(plan);
  const std::int64_t df = plan.f.degree();
  const std::int64_t dh = plan.h.degree();
  std::vector<BasisMonomial> out;
  for (std::int64_t i = 0; i <= plan.s; ++i) {
    for (std::int64_t j = 0; j <= df - 2; ++j)
      for (std::int64_t u = 0; u <= dh - 2; ++u)
        out.push_back(BasisMonomial{i, j, u, false});
    for (std::int64_t u = 0; u <= dh - plan.lambda - 1; ++u)
      out.push_back(BasisMonomial{i, df - 1, u, true});
  }
  return out;
}

std::vector<std::size_t> CodeInstance::nest_coords(std::size_t nest) const {
  std::vector<std::size_t> out(nest_size());
  std::iota(out.begin(), out.end(), nest * nest_size());
  return out;
}

std::vector<std::size_t> CodeInstance::subnest_coords(std::size_t nest, std::size_t sub) const {
  std::vector<std::size_t> out(subnest_size());
  std::iota(out.begin(), out.end(), nest * nest_size() + sub * subnest_size());
  return out;
}

CodeInstance build_code(const CodePlan& plan) {
  validate_plan(plan);
  const std::int64_t df = plan.f.degree();
  const std::int64_t dh = plan.h.degree();

  NestSystem sys = build_nest_system(plan.f, plan.h, (std::size_t)plan.ell);
  std::vector<Elem> points;
  points.reserve((std::size_t)(plan.ell * df * dh));
  for (const Nest& nest : sys.nests)
    for (const SubNest& sn : nest.subnests)
      points.insert(points.end(), sn.points.begin(), sn.points.end());

  std::vector<BasisMonomial> basis = enumerate_basis(plan);
  const std::size_t k = basis.size();
  const std::size_t n = points.size();

  Matrix g(plan.field, k, n);
  const Field& F = *plan.field;
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < n; ++c) {
    const Elem x = points[c];
    const Elem hx = plan.h(x);
    const Elem fhx = plan.f(hx);
    for (std::size_t r = 0; r < k; ++r) {
      const BasisMonomial& m = basis[r];
      Elem v = F.mul(F.pow(x, m.u), F.mul(F.pow(hx, m.j), F.pow(fhx, m.i)));
      g.at(r, c) = v;
    }
  }

  CodeInstance c{plan, std::move(sys), std::move(points), std::move(basis), std::move(g),
                 HlrcParams{}, 0, 0};
  c.params.n = (std::int64_t)n;
  c.params.k = (std::int64_t)k;
  c.params.b = dh - 1;
  c.params.a = df * dh - plan.lambda;
  c.params.lambda = plan.lambda;
  c.delta = (plan.s + 1) * df * dh - plan.lambda - 1;
  c.d = c.params.n - c.delta;
  validate_params(c.params);

  if (c.g.rank() != k)
    fail(Errc::RankDeficientGenerator, "generator matrix rank below message dimension");
  return c;
}

std::vector<Elem> encode(const CodeInstance& c, const std::vector<Elem>& message) {
  if (message.size() != c.k())
    fail(Errc::LengthMismatch, "message length " + std::to_string(message.size()) +
                                   ", expected " + std::to_string(c.k()));
  return c.g.mul_left(message);
}

Poly message_poly(const CodeInstance& c, const std::vector<Elem>& message) {
  if (message.size() != c.k())
    fail(Errc::LengthMismatch, "message length " + std::to_string(message.size()) +
                                   ", expected " + std::to_string(c.k()));
  const Poly fh = c.plan.f.compose(c.plan.h);
  auto poly_pow = [&](const Poly& base, std::int64_t m) {
    Poly r = Poly::constant(c.plan.field, 1);
    for (std::int64_t i = 0; i < m; ++i) r = r * base;
    return r;
  };
  Poly acc = Poly::zero(c.plan.field);
  for (std::size_t r = 0; r < c.basis.size(); ++r) {
    const BasisMonomial& m = c.basis[r];
    if (message[r] == 0) continue;
    Poly term = Poly::monomial(c.plan.field, message[r], (std::size_t)m.u) *
                poly_pow(c.plan.h, m.j) * poly_pow(fh, m.i);
    acc = acc + term;
  }
  return acc;
}

}  // namespace hlrc
