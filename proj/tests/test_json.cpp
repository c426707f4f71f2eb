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

#include <cstdint>
#include <vector>

#include "fixtures.hpp"
#include "hlrc/json_io.hpp"
#include "hlrc/simfail.hpp"

using namespace hlrc;
using fixtures::error_code_of;

TEST_SUITE("json") {
  TEST_CASE("field serialization") {
    FieldPtr prime = make_field(19, 1);
    Json jp = field_to_json(*prime);
    CHECK(jp["p"] == 19);
    CHECK(jp["e"] == 1);
    CHECK(jp["modulus"].is_null());
    CHECK(field_from_json(jp)->same_as(*prime));

    FieldPtr gf64 = make_field(2, 6);
    Json jx = field_to_json(*gf64);
    CHECK(jx["modulus"] == Json(std::vector<Elem>{1, 1, 0, 0, 0, 0, 1}));
    CHECK(field_from_json(jx)->same_as(*gf64));
    // Omitting the modulus selects the canonical default.
    CHECK(field_from_json(Json{{"p", 2}, {"e", 6}})->same_as(*gf64));

    CHECK(error_code_of([] { field_from_json(Json{{"e", 2}}); }) == Errc::BadInput);
    CHECK(error_code_of([] { field_from_json(Json::array()); }) == Errc::BadInput);
    CHECK(error_code_of([] { field_from_json(Json{{"p", 1 << 21}, {"e", 1}}); }) ==
          Errc::BadInput);
    CHECK(error_code_of([] { field_from_json(Json{{"p", 2}, {"e", 40}}); }) == Errc::BadInput);
  }

  TEST_CASE("polynomial serialization") {
    FieldPtr F = make_field(19, 1);
    Poly h(F, {0, 0, 0, 1});
    Json j = poly_to_json(h);
    CHECK(j["coeffs"] == Json(std::vector<Elem>{0, 0, 0, 1}));
    CHECK(poly_from_json(F, j).coeffs() == h.coeffs());
    CHECK(poly_from_json(F, Json::parse("[0,0,0,1]")).coeffs() == h.coeffs());

    CHECK(error_code_of([&F] { poly_from_json(F, Json("x^2")); }) == Errc::BadInput);
    CHECK(error_code_of([&F] { poly_from_json(F, Json::parse("[1,-2]")); }) == Errc::BadInput);
  }

  TEST_CASE("descriptor round trip with redundant fields") {
    CodeInstance c = fixtures::toy(1);
    Json j = descriptor_to_json(c, true);
    CHECK(j["schema"] == "hlrc/1");
    CHECK(j["params"]["n"] == 18);
    CHECK(j["params"]["k"] == 6);
    CHECK(j["params"]["d"] == 9);
    CHECK(j["params"]["b"] == 2);
    CHECK(j["params"]["a"] == 4);
    CHECK(j["eval_points"] == Json(c.eval_points));
    CHECK(j["matrix"].size() == 6);
    CHECK(j["nests"].size() == 3);

    CodeInstance back = descriptor_from_json(j);
    CHECK(back.g == c.g);
    CHECK(back.eval_points == c.eval_points);
    CHECK(back.d == c.d);

    // A descriptor without the redundant fields still rebuilds.
    Json minimal{{"field", j["field"]}, {"f", j["f"]}, {"h", j["h"]},
                 {"s", 1},              {"lambda", 2}, {"ell", 3}};
    CHECK(descriptor_from_json(minimal).g == c.g);
  }

  TEST_CASE("descriptor cross-checks reject tampering") {
    Json j = descriptor_to_json(fixtures::toy(1), true);

    Json bad_d = j;
    bad_d["params"]["d"] = 10;
    CHECK(error_code_of([&] { descriptor_from_json(bad_d); }) == Errc::BadInput);

    Json bad_matrix = j;
    bad_matrix["matrix"][2][5] = 1 + bad_matrix["matrix"][2][5].get<Elem>();
    CHECK(error_code_of([&] { descriptor_from_json(bad_matrix); }) == Errc::BadInput);

    Json bad_points = j;
    bad_points["eval_points"][0] = 2;
    CHECK(error_code_of([&] { descriptor_from_json(bad_points); }) == Errc::BadInput);

    Json bad_schema = j;
    bad_schema["schema"] = "hlrc/2";
    CHECK(error_code_of([&] { descriptor_from_json(bad_schema); }) == Errc::BadInput);

    Json missing = j;
    missing.erase("s");
    CHECK(error_code_of([&] { descriptor_from_json(missing); }) == Errc::BadInput);
  }

  TEST_CASE("words carry erasures as nulls") {
    auto [word, pattern] = word_from_json(Json::parse("[5,null,0,null,3,1]"), 6);
    CHECK(word.size() == 6);
    CHECK_FALSE(word[1].has_value());
    CHECK_FALSE(word[3].has_value());
    CHECK(*word[0] == 5);
    CHECK(*word[4] == 3);
    CHECK(pattern.erased == std::vector<std::size_t>{1, 3});

    auto [wrapped, wp] = word_from_json(Json{{"word", Json::parse("[1,2,3]")}}, 3);
    CHECK(wrapped.size() == 3);
    CHECK(wp.erased.empty());

    CHECK(error_code_of([] { word_from_json(Json::parse("[1,2]"), 3); }) == Errc::BadInput);
    CHECK(error_code_of([] { word_from_json(Json::parse("[1,-2,3]"), 3); }) == Errc::BadInput);
    CHECK(error_code_of([] { word_from_json(Json("word"), 3); }) == Errc::BadInput);

    CHECK(message_from_json(Json::parse("[4,0,7]")) == std::vector<Elem>{4, 0, 7});
    CHECK(message_from_json(Json{{"message", Json::parse("[4]")}}) == std::vector<Elem>{4});
    CHECK(error_code_of([] { message_from_json(Json::parse("[1.5]")); }) == Errc::BadInput);
  }

  TEST_CASE("scenario parsing") {
    Json j{{"seed", 9},
           {"rounds", 50},
           {"mix",
            Json{{"single", 1},
                 {"lambda_subnest", 2},
                 {"lambda_nest", 0.5},
                 {"scattered", Json{{"3", 0.25}, {"8", 1}}}}}};
    Scenario sc = scenario_from_json(j);
    CHECK(sc.seed == 9);
    CHECK(sc.rounds == 50);
    CHECK(sc.mix.single == 1);
    CHECK(sc.mix.lambda_subnest == 2);
    CHECK(sc.mix.lambda_nest == 0.5);
    CHECK(sc.mix.scattered.at(3) == 0.25);
    CHECK(sc.mix.scattered.at(8) == 1);

    // Absent weights default to zero.
    Scenario lean = scenario_from_json(
        Json{{"seed", 0}, {"rounds", 1}, {"mix", Json{{"single", 1}}}});
    CHECK(lean.mix.lambda_nest == 0);
    CHECK(lean.mix.scattered.empty());

    CHECK(error_code_of([] {
            scenario_from_json(Json{{"seed", 1}, {"rounds", 5}});
          }) == Errc::BadInput);
    CHECK(error_code_of([] {
            scenario_from_json(Json{{"rounds", 5}, {"mix", Json{{"single", 1}}}});
          }) == Errc::BadInput);
    CHECK(error_code_of([] {
            scenario_from_json(Json{{"seed", 1}, {"rounds", 5}, {"mix", Json::array()}});
          }) == Errc::BadInput);
    CHECK(error_code_of([] {
            scenario_from_json(
                Json{{"seed", 1}, {"rounds", 5}, {"mix", Json{{"single", "lots"}}}});
          }) == Errc::BadInput);
    CHECK(error_code_of([] {
            scenario_from_json(Json{{"seed", 1},
                                    {"rounds", 5},
                                    {"mix", Json{{"scattered", Json{{"x3", 1}}}}}});
          }) == Errc::BadInput);
  }

  TEST_CASE("report serialization") {
    CodeInstance c = fixtures::toy(1);
    Scenario sc;
    sc.seed = 5;
    sc.rounds = 20;
    sc.mix.single = 1;
    Json sim = sim_report_to_json(simulate(c, sc));
    CHECK(sim["schema"] == "hlrc/1");
    CHECK(sim["rounds"] == 20);
    CHECK(sim["failures"] == 0);
    CHECK_FALSE(sim.contains("first_failure"));
    CHECK(sim["access_histogram"] == Json::parse("[[2,20]]"));
    CHECK(sim["events"]["single"] == 20);
    CHECK(sim["steps"]["SUBNEST"] == 20);

    VerifyReport vr;
    vr.checks.push_back({"alpha", true, "fine"});
    vr.checks.push_back({"beta", false, "broken"});
    Json vj = verify_report_to_json(vr);
    CHECK(vj["all_pass"] == false);
    CHECK(vj["exact_d"].is_null());
    CHECK(vj["checks"].size() == 2);
    CHECK(vj["checks"][1]["name"] == "beta");
    CHECK(vj["checks"][1]["pass"] == false);
    vr.checks[1].pass = true;
    vr.exact_d = 15;
    Json vj2 = verify_report_to_json(vr);
    CHECK(vj2["all_pass"] == true);
    CHECK(vj2["exact_d"] == 15);

    BoundReport br = hlrc_bound({18, 6, 2, 4, 2});
    Json bj = bound_report_to_json(br);
    CHECK(bj["rho"] == 3);
    CHECK(bj["d_max_hlrc"] == 9);
    CHECK(bj["d_max_classical"] == 11);
    CHECK_FALSE(bj.contains("optimal"));
    br.optimal = true;
    CHECK(bound_report_to_json(br)["optimal"] == true);

    RepairPlan plan = plan_repair(c, make_pattern({0}, c.n()));
    Json pj = plan_to_json(plan);
    CHECK(pj["total_access"] == 2);
    CHECK(pj["steps"][0]["tier"] == "SUBNEST");
    CHECK(pj["steps"][0]["targets"] == Json::parse("[0]"));
    CHECK(pj["steps"][0]["helpers"] == Json::parse("[1,2]"));
  }

  TEST_CASE("rational bounds serialize exactly") {
    SplitEstimate est = chebotarev_estimate(19, 2, 3, 2, 3, 0);
    Json j = estimate_to_json(est);
    CHECK(j["lower_bound"]["num"] == -17);
    CHECK(j["lower_bound"]["den"] == 9);
    CHECK(j["lower_bound_approx"].get<double>() == doctest::Approx(-17.0 / 9));
    CHECK(j["vacuous"] == true);

    // Magnitudes beyond 64 bits fall back to decimal strings.
    est.lower_bound = Rational{(__int128)1 << 70, 3};
    Json big = estimate_to_json(est);
    CHECK(big["lower_bound"]["num"] == "1180591620717411303424");
    CHECK(big["lower_bound"]["den"] == 3);
    est.lower_bound = Rational{-((__int128)1 << 70), 3};
    CHECK(estimate_to_json(est)["lower_bound"]["num"] == "-1180591620717411303424");
  }

  TEST_CASE("text rendering aligns the generator grid") {
    CHECK(matrix_to_text(fixtures::toy(1).g) == fixtures::kToyMatrixText);

    FieldPtr F = make_field(7, 1);
    Matrix m(F, 2, 3);
    m.at(0, 0) = 1;
    m.at(1, 2) = 6;
    CHECK(matrix_to_text(m) == "1 0 0\n0 0 6\n");
  }
}
