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

#include "hlrc/json_io.hpp"

#include <sstream>

namespace hlrc {
namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::BadInput, what); }

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t need_u64(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    bad(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::int64_t need_i64(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::vector<Elem> elem_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      bad(std::string(what) + " entries must be non-negative integers");
    std::uint64_t u = v.get<std::uint64_t>();
    if (u >= Field::kMaxOrder) bad(std::string(what) + " entry out of range");
    out.push_back((Elem)u);
  }
  return out;
}

void check_schema(const Json& j) {
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kSchema))
    bad("unsupported schema, expected \"" + std::string(kSchema) + "\"");
}

Json rational_to_json(const Rational& r) {
  auto emit = [](__int128 v) -> Json {
    if (v <= (__int128)INT64_MAX && v >= (__int128)INT64_MIN) return (std::int64_t)v;
    bool negative = v < 0;
    unsigned __int128 u = negative ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string digits;
    while (u) {
      digits.push_back((char)('0' + (int)(u % 10)));
      u /= 10;
    }
    if (negative) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  };
  return Json{{"num", emit(r.num)}, {"den", emit(r.den)}};
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j{{"p", f.p()}, {"e", f.e()}};
  if (f.e() == 1)
    j["modulus"] = nullptr;
  else
    j["modulus"] = f.modulus();
  return j;
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object()) bad("field must be an object");
  std::uint64_t p = need_u64(j, "p");
  std::uint64_t e = need_u64(j, "e");
  if (p > Field::kMaxOrder || e > 32) bad("field parameters out of range");
  std::optional<std::vector<Elem>> modulus;
  auto it = j.find("modulus");
  if (it != j.end() && !it->is_null()) modulus = elem_array(*it, "modulus");
  return make_field((std::uint32_t)p, (std::uint32_t)e, std::move(modulus));
}

Json poly_to_json(const Poly& p) { return Json{{"coeffs", p.coeffs()}}; }

Poly poly_from_json(const FieldPtr& field, const Json& j) {
  if (j.is_array()) return Poly(field, elem_array(j, "coeffs"));
  if (!j.is_object()) bad("polynomial must be an object or array");
  return Poly(field, elem_array(need(j, "coeffs"), "coeffs"));
}

Json nests_to_json(const NestSystem& sys) {
  Json arr = Json::array();
  for (const Nest& nest : sys.nests) {
    Json subnests = Json::array();
    for (const SubNest& sn : nest.subnests)
      subnests.push_back(Json{{"h", sn.h_value}, {"points", sn.points}});
    arr.push_back(Json{{"t0", nest.t0}, {"subnests", std::move(subnests)}});
  }
  return arr;
}

Json estimate_to_json(const SplitEstimate& est) {
  return Json{{"q", est.q},
              {"deg_f", est.deg_f},
              {"deg_h", est.deg_h},
              {"ord_gf", est.ord_gf},
              {"ord_gh", est.ord_gh},
              {"genus", est.genus},
              {"lower_bound", rational_to_json(est.lower_bound)},
              {"lower_bound_approx", est.lower_bound.to_double()},
              {"vacuous", est.vacuous}};
}

Json bound_report_to_json(const BoundReport& r) {
  Json j{{"schema", kSchema},
         {"rho", r.rho},
         {"k1", r.k1},
         {"d_max_hlrc", r.d_max_hlrc},
         {"d_max_classical", r.d_max_classical}};
  if (r.optimal) j["optimal"] = *r.optimal;
  return j;
}

Json plan_to_json(const RepairPlan& plan) {
  Json steps = Json::array();
  for (const RepairStep& s : plan.steps)
    steps.push_back(
        Json{{"tier", tier_name(s.tier)}, {"targets", s.targets}, {"helpers", s.helpers}});
  return Json{{"steps", std::move(steps)}, {"total_access", plan.total_access}};
}

Json verify_report_to_json(const VerifyReport& rep) {
  Json checks = Json::array();
  for (const CheckItem& c : rep.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json j{{"schema", kSchema}, {"all_pass", rep.all_pass()}, {"checks", std::move(checks)}};
  if (rep.exact_d)
    j["exact_d"] = *rep.exact_d;
  else
    j["exact_d"] = nullptr;
  return j;
}

Json sim_report_to_json(const SimReport& rep) {
  Json hist = Json::array();
  for (const auto& [access, count] : rep.access_histogram)
    hist.push_back(Json::array({access, count}));
  Json j{{"schema", kSchema},
         {"rounds", rep.rounds},
         {"seed", rep.seed},
         {"events", rep.events},
         {"steps", rep.steps},
         {"access_histogram", std::move(hist)},
         {"repaired_symbols", rep.repaired_symbols},
         {"helper_accesses", rep.helper_accesses},
         {"mean_helpers_per_symbol", rep.mean_helpers_per_symbol},
         {"failures", rep.failures}};
  if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
  return j;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) bad("scenario must be an object");
  check_schema(j);
  Scenario sc;
  sc.seed = need_u64(j, "seed");
  sc.rounds = need_u64(j, "rounds");
  const Json& mix = need(j, "mix");
  if (!mix.is_object()) bad("mix must be an object");
  auto weight = [&mix](const char* key) -> double {
    auto it = mix.find(key);
    if (it == mix.end()) return 0;
    if (!it->is_number()) bad(std::string("weight \"") + key + "\" must be a number");
    return it->get<double>();
  };
  sc.mix.single = weight("single");
  sc.mix.lambda_subnest = weight("lambda_subnest");
  sc.mix.lambda_nest = weight("lambda_nest");
  auto it = mix.find("scattered");
  if (it != mix.end()) {
    if (!it->is_object()) bad("scattered must map erasure counts to weights");
    for (const auto& [key, value] : it->items()) {
      std::int64_t count = 0;
      try {
        count = std::stoll(key);
      } catch (...) {
        bad("scattered key \"" + key + "\" is not an integer");
      }
      if (!value.is_number()) bad("scattered weights must be numbers");
      sc.mix.scattered[count] = value.get<double>();
    }
  }
  return sc;
}

Json descriptor_to_json(const CodeInstance& c, bool include_matrix) {
  Json params{{"n", c.params.n},
              {"k", c.params.k},
              {"d", c.d},
              {"b", c.params.b},
              {"a", c.params.a}};
  Json j{{"schema", kSchema},
         {"field", field_to_json(*c.plan.field)},
         {"f", poly_to_json(c.plan.f)},
         {"h", poly_to_json(c.plan.h)},
         {"s", c.plan.s},
         {"lambda", c.plan.lambda},
         {"ell", c.plan.ell},
         {"params", std::move(params)},
         {"eval_points", c.eval_points},
         {"nests", nests_to_json(c.nest_system)}};
  if (include_matrix) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < c.g.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < c.g.cols(); ++col) row.push_back(c.g.at(r, col));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

CodeInstance descriptor_from_json(const Json& j) {
  if (!j.is_object()) bad("descriptor must be an object");
  check_schema(j);
  FieldPtr field = field_from_json(need(j, "field"));
  CodePlan plan{field, poly_from_json(field, need(j, "f")), poly_from_json(field, need(j, "h")),
                need_i64(j, "s"), need_i64(j, "lambda"), need_i64(j, "ell")};
  CodeInstance c = build_code(plan);

  if (auto it = j.find("params"); it != j.end()) {
    const Json& p = *it;
    if (need_i64(p, "n") != c.params.n || need_i64(p, "k") != c.params.k ||
        need_i64(p, "d") != c.d || need_i64(p, "b") != c.params.b ||
        need_i64(p, "a") != c.params.a)
      bad("descriptor params do not match the rebuilt code");
  }
  if (auto it = j.find("eval_points"); it != j.end()) {
    if (elem_array(*it, "eval_points") != c.eval_points)
      bad("descriptor eval_points do not match the rebuilt code");
  }
  if (auto it = j.find("matrix"); it != j.end()) {
    const Json& rows = *it;
    bool ok = rows.is_array() && rows.size() == c.g.rows();
    for (std::size_t r = 0; ok && r < c.g.rows(); ++r) {
      std::vector<Elem> row = elem_array(rows[r], "matrix row");
      ok = row.size() == c.g.cols();
      for (std::size_t col = 0; ok && col < c.g.cols(); ++col)
        ok = row[col] == c.g.at(r, col);
    }
    if (!ok) bad("descriptor matrix does not match the rebuilt code");
  }
  return c;
}

std::pair<std::vector<std::optional<Elem>>, ErasurePattern> word_from_json(const Json& j,
                                                                           std::size_t n) {
  const Json* arr = &j;
  if (j.is_object()) arr = &need(j, "word");
  if (!arr->is_array()) bad("word must be an array");
  if (arr->size() != n)
    bad("word length " + std::to_string(arr->size()) + ", expected " + std::to_string(n));
  std::vector<std::optional<Elem>> word(n);
  std::vector<std::size_t> erased;
  for (std::size_t i = 0; i < n; ++i) {
    const Json& v = (*arr)[i];
    if (v.is_null()) {
      erased.push_back(i);
    } else if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      word[i] = (Elem)v.get<std::uint64_t>();
    } else {
      bad("word entries must be non-negative integers or null");
    }
  }
  return {std::move(word), make_pattern(std::move(erased), n)};
}

std::vector<Elem> message_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) arr = &need(j, "message");
  return elem_array(*arr, "message");
}

std::string matrix_to_text(const Matrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      width = std::max(width, std::to_string(m.at(r, c)).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string s = std::to_string(m.at(r, c));
      if (c) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hlrc
