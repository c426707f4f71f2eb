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

#include "hlrc/simfail.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "hlrc/repair.hpp"
#include "hlrc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hlrc {
namespace {

struct EventKind {
  std::string name;
  std::int64_t scattered_j;  // -1 for the structured kinds
  double weight;
};

std::vector<EventKind> flatten_mix(const CodeInstance& c, const EventMix& mix) {
  std::vector<EventKind> kinds;
  auto push = [&kinds](const std::string& name, std::int64_t j, double w) {
    if (w < 0 || !std::isfinite(w)) fail(Errc::BadInput, "event weight must be finite and >= 0");
    if (w > 0) kinds.push_back(EventKind{name, j, w});
  };
  push("single", -1, mix.single);
  push("lambda_subnest", -1, mix.lambda_subnest);
  push("lambda_nest", -1, mix.lambda_nest);
  for (const auto& [j, w] : mix.scattered) {
    if (j < 1 || j > c.d - 1)
      fail(Errc::BadInput, "scattered erasure count " + std::to_string(j) +
                               " outside 1..d-1 = " + std::to_string(c.d - 1));
    push("scattered_" + std::to_string(j), j, w);
  }
  if (kinds.empty()) fail(Errc::BadInput, "event mix has no positive weight");
  return kinds;
}

struct Agg {
  std::map<std::string, std::uint64_t> events;
  std::map<std::string, std::uint64_t> steps;
  std::map<std::uint64_t, std::uint64_t> access_histogram;
  std::uint64_t repaired_symbols = 0;
  std::uint64_t helper_accesses = 0;
  std::uint64_t failures = 0;
  std::uint64_t first_failure_round = ~0ULL;
  std::string first_failure;

  void note_failure(std::uint64_t round, const std::string& what) {
    ++failures;
    if (round < first_failure_round) {
      first_failure_round = round;
      first_failure = "round " + std::to_string(round) + ": " + what;
    }
  }

  void merge(const Agg& o) {
    for (const auto& [k, v] : o.events) events[k] += v;
    for (const auto& [k, v] : o.steps) steps[k] += v;
    for (const auto& [k, v] : o.access_histogram) access_histogram[k] += v;
    repaired_symbols += o.repaired_symbols;
    helper_accesses += o.helper_accesses;
    failures += o.failures;
    if (o.first_failure_round < first_failure_round) {
      first_failure_round = o.first_failure_round;
      first_failure = o.first_failure;
    }
  }
};

void run_round(const CodeInstance& c, const std::vector<EventKind>& kinds, double total_weight,
               std::uint64_t seed, std::uint64_t round, Agg& agg) {
  Rng rng(seed ^ round);
  const Field& F = *c.plan.field;

  std::vector<Elem> message(c.k());
  for (auto& m : message) m = (Elem)rng.bounded(F.q());
  const std::vector<Elem> codeword = encode(c, message);

  double pick = (double)(rng.next() >> 11) * 0x1.0p-53 * total_weight;
  std::size_t kind_idx = 0;
  for (double acc = 0; kind_idx + 1 < kinds.size(); ++kind_idx) {
    acc += kinds[kind_idx].weight;
    if (pick < acc) break;
  }
  const EventKind& kind = kinds[kind_idx];
  ++agg.events[kind.name];

  std::vector<std::size_t> coords;
  const std::size_t lambda = (std::size_t)c.params.lambda;
  if (kind.scattered_j >= 0) {
    for (auto v : rng.distinct((std::uint64_t)kind.scattered_j, c.n()))
      coords.push_back((std::size_t)v);
  } else if (kind.name == "single") {
    coords.push_back((std::size_t)rng.bounded(c.n()));
  } else if (kind.name == "lambda_subnest") {
    std::size_t subnests = c.n() / c.subnest_size();
    std::size_t base = (std::size_t)rng.bounded(subnests) * c.subnest_size();
    for (auto v : rng.distinct(lambda, c.subnest_size())) coords.push_back(base + (std::size_t)v);
  } else {
    std::size_t base = (std::size_t)rng.bounded(c.nest_system.ell()) * c.nest_size();
    for (auto v : rng.distinct(lambda, c.nest_size())) coords.push_back(base + (std::size_t)v);
  }

  const ErasurePattern pattern = make_pattern(coords, c.n());
  RepairPlan plan;
  std::vector<Elem> restored;
  try {
    plan = plan_repair(c, pattern);
    std::vector<std::optional<Elem>> word(codeword.begin(), codeword.end());
    for (std::size_t e : pattern.erased) word[e] = std::nullopt;
    restored = repair(c, word, pattern);
  } catch (const Error& e) {
    agg.note_failure(round, e.what());
    return;
  }

  if (restored != codeword) agg.note_failure(round, "repaired word differs from the codeword");

  // Access ceilings: each tier must read exactly its contract.
  std::map<std::size_t, std::set<std::size_t>> per_nest;
  for (const RepairStep& step : plan.steps) {
    ++agg.steps[tier_name(step.tier)];
    const std::size_t expected =
        step.tier == Tier::Subnest  ? (std::size_t)c.params.b
        : step.tier == Tier::Nest   ? (std::size_t)c.params.a
                                    : c.k();
    if (step.helpers.size() != expected)
      agg.note_failure(round, std::string(tier_name(step.tier)) + " step read " +
                                  std::to_string(step.helpers.size()) + " helpers, expected " +
                                  std::to_string(expected));
    if (step.tier != Tier::Global)
      for (std::size_t h : step.helpers) per_nest[c.nest_of(h)].insert(h);
  }
  for (const auto& [nest, helpers] : per_nest)
    if ((std::int64_t)helpers.size() > c.params.a)
      agg.note_failure(round, "nest " + std::to_string(nest) + " read " +
                                  std::to_string(helpers.size()) + " helpers, above a");

  ++agg.access_histogram[plan.total_access];
  agg.helper_accesses += plan.total_access;
  agg.repaired_symbols += pattern.erased.size();
}

}  // namespace

SimReport simulate(const CodeInstance& c, const Scenario& sc, int jobs) {
  if (sc.rounds == 0) fail(Errc::BadInput, "at least one round is required");
  const std::vector<EventKind> kinds = flatten_mix(c, sc.mix);
  double total_weight = 0;
  for (const EventKind& k : kinds) total_weight += k.weight;

  int nt = 1;
#ifdef _OPENMP
  nt = jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
#endif
  std::vector<Agg> partial((std::size_t)nt);

#pragma omp parallel num_threads(nt)
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    Agg& agg = partial[(std::size_t)tid];
#pragma omp for schedule(static)
    for (std::uint64_t round = 0; round < sc.rounds; ++round)
      run_round(c, kinds, total_weight, sc.seed, round, agg);
  }

  Agg total;
  for (const Agg& p : partial) total.merge(p);

  SimReport rep;
  rep.rounds = sc.rounds;
  rep.seed = sc.seed;
  rep.events = std::move(total.events);
  rep.steps = std::move(total.steps);
  rep.access_histogram = std::move(total.access_histogram);
  rep.repaired_symbols = total.repaired_symbols;
  rep.helper_accesses = total.helper_accesses;
  rep.mean_helpers_per_symbol =
      rep.repaired_symbols ? (double)rep.helper_accesses / (double)rep.repaired_symbols : 0.0;
  rep.failures = total.failures;
  rep.first_failure = total.first_failure;
  return rep;
}

}  // namespace hlrc
