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

// End-to-end checks of the command line binary: one process per invocation,
// JSON captured from stdout, human text from stderr, exit codes from wait().

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hlrc/json_io.hpp"

using namespace hlrc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hlrc_cli_test_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

RunResult run(const std::string& args) {
  const fs::path out = scratch() / "out.txt";
  const fs::path err = scratch() / "err.txt";
  std::string cmd = std::string(HLRC_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                    err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = status == -1 ? -1 : (WIFEXITED(status) ? WEXITSTATUS(status) : -2);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path file(const char* name, const std::string& text) {
  fs::path p = scratch() / name;
  spit(p, text);
  return p;
}

// One shared descriptor per instance shape, built once through the binary.
const std::string& toy_code_path(std::int64_t s) {
  static std::string paths[2];
  std::string& path = paths[s];
  if (path.empty()) {
    RunResult r = run("build --p 19 --f 0,0,1 --h 0,0,0,1 --s " + std::to_string(s) +
                      " --lambda 2 --ell 3");
    REQUIRE(r.code == 0);
    fs::path p = scratch() / ("code_s" + std::to_string(s) + ".json");
    spit(p, r.out);
    path = p.string();
  }
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bound reports the ceiling and the optimality flag") {
    RunResult r = run("bound --n 18 --k 6 --b 2 --a 4 --lambda 2");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema"] == "hlrc/1");
    CHECK(j["rho"] == 3);
    CHECK(j["k1"] == 2);
    CHECK(j["d_max_hlrc"] == 9);
    CHECK(j["d_max_classical"] == 11);
    CHECK_FALSE(j.contains("optimal"));
    CHECK(r.err.find("d <= 9") != std::string::npos);

    Json yes = Json::parse(run("bound --n 18 --k 6 --b 2 --a 4 --lambda 2 --d 9").out);
    CHECK(yes["optimal"] == true);
    RunResult no = run("bound --n 18 --k 6 --b 2 --a 4 --lambda 2 --d 8");
    CHECK(no.code == 0);
    CHECK(Json::parse(no.out)["optimal"] == false);
  }

  TEST_CASE("search lists split values and nests") {
    RunResult r = run("search --p 19 --f 0,0,1 --h 0,0,0,1");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["split_values"] == Json(fixtures::kToySplitValues));
    CHECK(j["ell"] == 3);
    CHECK(j["nests"].size() == 3);
    CHECK(j["nests"][0]["t0"] == 1);
    CHECK(j["nests"][0]["subnests"].size() == 2);
    CHECK_FALSE(j.contains("estimate"));

    RunResult again = run("search --p 19 --f 0,0,1 --h 0,0,0,1");
    CHECK(again.out == r.out);

    Json est = Json::parse(
        run("search --p 19 --f 0,0,1 --h 0,0,0,1 --ord-gf 2 --ord-gh 3").out);
    REQUIRE(est.contains("estimate"));
    CHECK(est["estimate"]["vacuous"] == true);
    CHECK(est["estimate"]["lower_bound"]["num"] == -17);

    Json gf64 = Json::parse(run("search --p 2 --e 6 --f 0,0,0,1 --h 0,0,0,1").out);
    CHECK(gf64["ell"] == 7);
    CHECK(gf64["split_values"].size() == 7);
  }

  TEST_CASE("build emits a verifiable descriptor") {
    RunResult r = run("build --p 19 --f 0,0,1 --h 0,0,0,1 --s 1 --lambda 2 --ell 3");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["params"]["n"] == 18);
    CHECK(j["params"]["k"] == 6);
    CHECK(j["params"]["d"] == 9);
    CHECK(j["eval_points"] == Json(fixtures::kToyEvalPoints));
    CHECK_FALSE(j.contains("matrix"));
    CHECK(r.err.find("optimal") != std::string::npos);

    Json withm = Json::parse(
        run("build --p 19 --f 0,0,1 --h 0,0,0,1 --s 1 --lambda 2 --ell 3 --matrix json").out);
    REQUIRE(withm["matrix"].size() == 6);
    for (std::size_t row = 0; row < 6; ++row)
      for (std::size_t col = 0; col < 18; ++col)
        CHECK(withm["matrix"][row][col] == fixtures::kToyMatrix[row][col]);

    RunResult text = run(
        "build --p 19 --f 0,0,1 --h 0,0,0,1 --s 1 --lambda 2 --ell 3 --matrix text");
    CHECK(text.err.find(fixtures::kToyMatrixText) != std::string::npos);
  }

  TEST_CASE("encode, repair, and verify form a pipeline") {
    const std::string& code = toy_code_path(0);
    RunResult enc = run("encode --code " + code + " --message 1,2,3");
    REQUIRE(enc.code == 0);
    Json word = Json::parse(enc.out);
    REQUIRE(word["word"].size() == 18);

    // The binary and the library must encode identically.
    CodeInstance c = descriptor_from_json(Json::parse(slurp(code)));
    CHECK(word["word"] == Json(encode(c, {1, 2, 3})));

    // Same codeword through the stdin route and a message file.
    fs::path msg = file("msg.json", "{\"message\":[1,2,3]}");
    RunResult via_stdin = run("encode --code - --in " + msg.string() + " < " + code);
    CHECK(via_stdin.code == 0);
    CHECK(via_stdin.out == enc.out);

    Json erased = word["word"];
    erased[0] = nullptr;
    erased[5] = nullptr;
    fs::path ej = file("erased.json", erased.dump());
    RunResult rep = run("repair --code " + code + " --in " + ej.string());
    REQUIRE(rep.code == 0);
    Json fixed = Json::parse(rep.out);
    CHECK(fixed["word"] == word["word"]);
    CHECK(fixed["plan"]["total_access"] == 4);
    CHECK(fixed["plan"]["steps"].size() == 2);
    CHECK(fixed["plan"]["steps"][0]["tier"] == "SUBNEST");

    RunResult ver = run("verify --code " + code);
    REQUIRE(ver.code == 0);
    Json vj = Json::parse(ver.out);
    CHECK(vj["all_pass"] == true);
    CHECK(vj["exact_d"] == 15);
    CHECK(ver.err.find("all checks passed") != std::string::npos);
  }

  TEST_CASE("verify degrades gracefully when the scan budget is tiny") {
    RunResult ver = run("verify --code " + toy_code_path(1) +
                        " --mode paranoid --scan-cap 1000");
    CHECK(ver.code == 0);
    Json vj = Json::parse(ver.out);
    CHECK(vj["all_pass"] == true);
    CHECK(vj["exact_d"].is_null());
    CHECK(ver.err.find("skipped") != std::string::npos);
  }

  TEST_CASE("exit codes separate validation from runtime failures") {
    // Constant outer polynomial: rejected while validating the plan.
    CHECK(run("build --p 19 --f 5 --h 0,0,1 --s 0 --lambda 1 --ell 1").code == 2);
    // More nests requested than exist.
    CHECK(run("build --p 19 --f 0,0,1 --h 0,0,0,1 --s 0 --lambda 2 --ell 9").code == 2);
    // Unreadable descriptor.
    CHECK(run("encode --code /nonexistent/code.json --message 1").code == 2);
    // Unknown flag and missing subcommand are parse errors.
    CHECK(run("bound --nope 3").code == 2);
    CHECK(run("").code == 2);
    // Malformed JSON input.
    fs::path junk = file("junk.json", "{nope");
    CHECK(run("encode --code " + junk.string() + " --message 1").code == 2);

    // Too many erasures for the code is a runtime failure on valid input.
    const std::string& code = toy_code_path(0);
    Json word = Json::parse(run("encode --code " + code + " --message 1,2,3").out)["word"];
    for (int i = 0; i < 15; ++i) word[i] = nullptr;
    fs::path hopeless = file("hopeless.json", word.dump());
    CHECK(run("repair --code " + code + " --in " + hopeless.string()).code == 3);

    CHECK(run("--help").code == 0);
    CHECK(run("--help").out.find("simulate") != std::string::npos);
  }

  TEST_CASE("simulate is reproducible across runs, threads, and input routes") {
    const std::string& code = toy_code_path(0);
    const std::string flags = "simulate --code " + code + " --seed 42 --rounds 200";
    RunResult a = run(flags);
    REQUIRE(a.code == 0);
    Json ja = Json::parse(a.out);
    CHECK(ja["failures"] == 0);
    CHECK(ja["rounds"] == 200);
    CHECK(run(flags).out == a.out);
    CHECK(run(flags + " --jobs 4").out == a.out);

    // A scenario file describing the same mix yields the same bytes.
    fs::path sc = file("scenario.json",
                       R"({"seed":42,"rounds":200,)"
                       R"("mix":{"single":1,"lambda_subnest":1,"lambda_nest":1}})");
    CHECK(run("simulate --code " + code + " --scenario " + sc.string()).out == a.out);

    // Mix flags conflict with a scenario file.
    CHECK(run("simulate --code " + code + " --scenario " + sc.string() + " --single 2").code ==
          2);
    // Scattered weight outside 1..d-1.
    CHECK(run("simulate --code " + code + " --rounds 10 --scattered 17:1").code == 2);
  }
}
