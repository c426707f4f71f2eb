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

#include "hlrc/repair.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hlrc {

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::Subnest: return "SUBNEST";
    case Tier::Nest: return "NEST";
    case Tier::Global: return "GLOBAL";
  }
  return "?";
}

ErasurePattern make_pattern(std::vector<std::size_t> coords, std::size_t n) {
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  if (!coords.empty() && coords.back() >= n)
    fail(Errc::BadInput, "erased coordinate out of range");
  return ErasurePattern{std::move(coords)};
}

namespace {

// Surviving point of coordinate c, as (point, coord).
struct NestView {
  std::vector<std::size_t> erased;                 // coords in this nest
  std::map<std::size_t, std::size_t> per_subnest;  // sub-nest index -> erasure count
};

std::map<std::size_t, NestView> group_by_nest(const CodeInstance& c,
                                              const ErasurePattern& pattern) {
  std::map<std::size_t, NestView> nests;
  for (std::size_t coord : pattern.erased) {
    NestView& view = nests[c.nest_of(coord)];
    view.erased.push_back(coord);
    ++view.per_subnest[c.subnest_of(coord)];
  }
  return nests;
}

}  // namespace

RepairPlan plan_repair(const CodeInstance& c, const ErasurePattern& pattern) {
  if (!pattern.erased.empty() && pattern.erased.back() >= c.n())
    fail(Errc::BadInput, "erased coordinate out of range");
  if ((std::int64_t)pattern.erased.size() > c.d - 1)
    fail(Errc::TooManyErasures, std::to_string(pattern.erased.size()) +
                                    " erasures exceed the d-1 = " + std::to_string(c.d - 1) +
                                    " guarantee");
  const std::set<std::size_t> erased(pattern.erased.begin(), pattern.erased.end());
  auto nests = group_by_nest(c, pattern);

  bool global = false;
  for (const auto& [nest, view] : nests)
    if ((std::int64_t)view.erased.size() > c.params.lambda) global = true;

  RepairPlan plan;
  if (global) {
    // First k surviving columns that are linearly independent.
    ColumnSpan span(c.plan.field);
    std::vector<std::size_t> helpers;
    for (std::size_t coord = 0; coord < c.n() && helpers.size() < c.k(); ++coord) {
      if (erased.count(coord)) continue;
      std::vector<Elem> col(c.k());
      for (std::size_t r = 0; r < c.k(); ++r) col[r] = c.g.at(r, coord);
      if (span.accept(std::move(col))) helpers.push_back(coord);
    }
    if (helpers.size() < c.k())
      fail(Errc::TooManyErasures, "surviving columns do not determine the codeword");
    plan.steps.push_back(RepairStep{Tier::Global, pattern.erased, std::move(helpers)});
  } else {
    for (const auto& [nest, view] : nests) {
      bool isolated = true;
      for (const auto& [sub, count] : view.per_subnest)
        if (count > 1) isolated = false;
      if (isolated) {
        for (std::size_t coord : view.erased) {
          std::vector<std::size_t> helpers;
          for (std::size_t h : c.subnest_coords(nest, c.subnest_of(coord)))
            if (h != coord) helpers.push_back(h);
          plan.steps.push_back(RepairStep{Tier::Subnest, {coord}, std::move(helpers)});
        }
      } else {
        // The a smallest surviving points of the nest, by canonical value.
        std::vector<std::pair<Elem, std::size_t>> survivors;
        for (std::size_t coord : c.nest_coords(nest))
          if (!erased.count(coord)) survivors.emplace_back(c.eval_points[coord], coord);
        std::sort(survivors.begin(), survivors.end());
        survivors.resize((std::size_t)c.params.a);
        std::vector<std::size_t> helpers;
        for (auto& [point, coord] : survivors) helpers.push_back(coord);
        std::sort(helpers.begin(), helpers.end());
        plan.steps.push_back(RepairStep{Tier::Nest, view.erased, std::move(helpers)});
      }
    }
  }

  std::set<std::size_t> touched;
  for (const RepairStep& step : plan.steps)
    touched.insert(step.helpers.begin(), step.helpers.end());
  plan.total_access = touched.size();
  return plan;
}

std::vector<Elem> repair(const CodeInstance& c,
                         const std::vector<std::optional<Elem>>& word,
                         const ErasurePattern& pattern) {
  if (word.size() != c.n())
    fail(Errc::LengthMismatch, "word length " + std::to_string(word.size()) + ", expected " +
                                   std::to_string(c.n()));
  {
    std::set<std::size_t> erased(pattern.erased.begin(), pattern.erased.end());
    for (std::size_t i = 0; i < word.size(); ++i)
      if (word[i].has_value() == (erased.count(i) > 0))
        fail(Errc::BadInput, "word erasures do not match the pattern");
  }
  const RepairPlan plan = plan_repair(c, pattern);

  std::vector<Elem> out(c.n());
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i]) out[i] = *word[i];

  for (const RepairStep& step : plan.steps) {
    switch (step.tier) {
      case Tier::Subnest:
      case Tier::Nest: {
        // Codewords restricted to a sub-nest (resp. nest) are evaluations of
        // a polynomial of degree < b (resp. < a): interpolate the helpers.
        std::vector<std::pair<Elem, Elem>> samples;
        for (std::size_t h : step.helpers)
          samples.emplace_back(c.eval_points[h], out[h]);
        Poly local = Poly::interpolate(c.plan.field, samples);
        for (std::size_t t : step.targets) out[t] = local(c.eval_points[t]);
        break;
      }
      case Tier::Global: {
        std::vector<Elem> values(step.helpers.size());
        for (std::size_t i = 0; i < step.helpers.size(); ++i)
          values[i] = out[step.helpers[i]];
        auto message = c.g.select_columns(step.helpers).solve_left(values);
        if (!message)
          fail(Errc::InconsistentWord, "helper columns are singular");
        std::vector<Elem> full = c.g.mul_left(*message);
        const std::set<std::size_t> erased(pattern.erased.begin(), pattern.erased.end());
        for (std::size_t i = 0; i < c.n(); ++i) {
          if (erased.count(i)) continue;
          if (full[i] != out[i])
            fail(Errc::InconsistentWord,
                 "survivors do not match any codeword at coordinate " + std::to_string(i));
        }
        for (std::size_t t : step.targets) out[t] = full[t];
        break;
      }
    }
  }
  return out;
}

bool tolerance_check(const CodeInstance& c, const std::vector<std::size_t>& cols,
                     std::size_t x, std::uint64_t subset_cap) {
  if (cols.empty()) fail(Errc::EmptyInput, "no columns to check");
  for (std::size_t col : cols)
    if (col >= c.n()) fail(Errc::BadInput, "column index out of range");
  if (x == 0 || x > cols.size()) fail(Errc::BadInput, "subset size out of range");

  const std::size_t m = cols.size();
  __int128 subsets = 1;
  for (std::size_t i = 0; i < x; ++i) {
    subsets = subsets * (__int128)(m - i) / (__int128)(i + 1);
    if (subsets > (__int128)subset_cap)
      fail(Errc::TooLarge, "subset count exceeds cap " + std::to_string(subset_cap));
  }

  // Erasing E inside cols is recoverable iff rank(cols \ E) = rank(cols).
  const std::size_t full_rank = c.g.select_columns(cols).rank();
  std::vector<std::size_t> pick(x);
  for (std::size_t i = 0; i < x; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> rest;
    rest.reserve(m - x);
    std::size_t next = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (next < x && pick[next] == i)
        ++next;
      else
        rest.push_back(cols[i]);
    }
    if (c.g.select_columns(rest).rank() != full_rank) return false;

    // Next x-combination in lexicographic order.
    std::size_t i = x;
    while (i-- > 0) {
      if (pick[i] != i + m - x) {
        ++pick[i];
        for (std::size_t j = i + 1; j < x; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

}  // namespace hlrc
