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

// Command line front end. Standard output carries exactly one JSON document
// per invocation; everything meant for humans goes to standard error. Exit
// codes: 0 success, 2 validation error, 3 runtime error, 4 verification
// failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hlrc/bounds.hpp"
#include "hlrc/code.hpp"
#include "hlrc/json_io.hpp"
#include "hlrc/nests.hpp"
#include "hlrc/oracle.hpp"
#include "hlrc/repair.hpp"
#include "hlrc/simfail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace hlrc;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::exception& e) {
    fail(Errc::BadInput, "invalid JSON in \"" + path + "\": " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::vector<Elem> parse_coeffs(const std::string& text, const char* what) {
  std::vector<Elem> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v >= Field::kMaxOrder) throw std::invalid_argument(item);
      out.push_back((Elem)v);
    } catch (...) {
      fail(Errc::BadInput, std::string(what) + ": bad coefficient \"" + item + "\"");
    }
  }
  if (out.empty()) fail(Errc::BadInput, std::string(what) + ": empty coefficient list");
  return out;
}

struct FieldFlags {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::string modulus;

  FieldPtr make() const {
    std::optional<std::vector<Elem>> mod;
    if (!modulus.empty()) mod = parse_coeffs(modulus, "--modulus");
    return make_field(p, e, std::move(mod));
  }
};

void add_field_flags(CLI::App* cmd, FieldFlags& ff) {
  cmd->add_option("--p", ff.p, "field characteristic (prime)")->required();
  cmd->add_option("--e", ff.e, "extension degree (default 1)");
  cmd->add_option("--modulus", ff.modulus,
                  "irreducible modulus, ascending coefficients (default: smallest)");
}

struct PairFlags {
  FieldFlags field;
  std::string f, h;
};

void add_pair_flags(CLI::App* cmd, PairFlags& pf) {
  add_field_flags(cmd, pf.field);
  cmd->add_option("--f", pf.f, "outer polynomial, ascending comma-separated coefficients")
      ->required();
  cmd->add_option("--h", pf.h, "inner polynomial, ascending comma-separated coefficients")
      ->required();
}

CodeInstance load_code(const std::string& path) {
  return descriptor_from_json(load_json(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for hierarchical locally recoverable codes from nested polynomial pairs"};
  app.require_subcommand(1);
  // --h is a polynomial flag, so no -h short help anywhere.
  app.set_help_flag("--help", "print help and exit");
  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print help and exit");
    s->fallthrough();  // global flags like --jobs may follow the subcommand
    return s;
  };

  int jobs = 0;
  app.add_option("--jobs", jobs, "cap on worker threads (0 = library default)");
  auto apply_jobs = [&] {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
  };

  int exit_code = 0;

  // search: enumerate totally split values of f(h(X)) and the nest partition.
  auto* search = sub("search", "list totally split values and nests for (f, h)");
  PairFlags search_pf;
  std::uint64_t ord_gf = 0, ord_gh = 0, genus = 0;
  add_pair_flags(search, search_pf);
  search->add_option("--ord-gf", ord_gf, "order of the Galois group of f (enables the estimate)");
  search->add_option("--ord-gh", ord_gh, "order of the Galois group of h (enables the estimate)");
  search->add_option("--genus", genus, "genus for the split-count estimate (default 0)");
  search->callback([&] {
    apply_jobs();
    FieldPtr field = search_pf.field.make();
    Poly f(field, parse_coeffs(search_pf.f, "--f"));
    Poly h(field, parse_coeffs(search_pf.h, "--h"));
    std::vector<Elem> sv = split_values(f, h);
    Json out{{"schema", kSchema}, {"split_values", sv}, {"ell", sv.size()}};
    if (sv.empty()) {
      out["nests"] = Json::array();
    } else {
      NestSystem sys = build_nest_system(f, h, (std::int64_t)sv.size());
      out["nests"] = nests_to_json(sys);
    }
    if (ord_gf > 0 && ord_gh > 0) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < field->e(); ++i) q *= field->p();
      out["estimate"] = estimate_to_json(chebotarev_estimate(
          q, (std::uint32_t)f.degree(), (std::uint32_t)h.degree(), ord_gf, ord_gh, genus));
    }
    emit(out);
    std::cerr << "ell=" << sv.size() << " totally split values\n";
  });

  // build: construct a code instance and print its descriptor.
  auto* build = sub("build", "construct a code and print its descriptor");
  PairFlags build_pf;
  std::int64_t s = 0, lambda = 2, ell = 0;
  std::string matrix_mode = "none";
  add_pair_flags(build, build_pf);
  build->add_option("--s", s, "highest power of f(h(X)) in the message space")->required();
  build->add_option("--lambda", lambda, "nest-level erasure budget")->required();
  build->add_option("--ell", ell, "number of nests (default: all available)");
  build->add_option("--matrix", matrix_mode, "generator matrix output: none, json, or text")
      ->check(CLI::IsMember({"none", "json", "text"}));
  build->callback([&] {
    apply_jobs();
    FieldPtr field = build_pf.field.make();
    Poly f(field, parse_coeffs(build_pf.f, "--f"));
    Poly h(field, parse_coeffs(build_pf.h, "--h"));
    std::int64_t use_ell = ell;
    if (use_ell == 0) use_ell = (std::int64_t)split_values(f, h).size();
    CodeInstance c = build_code(CodePlan{field, f, h, s, lambda, use_ell});
    emit(descriptor_to_json(c, matrix_mode == "json"));
    if (matrix_mode == "text") std::cerr << matrix_to_text(c.g);
    BoundReport br = hlrc_bound(c.params);
    std::cerr << "n=" << c.params.n << " k=" << c.params.k << " d=" << c.d
              << " b=" << c.params.b << " a=" << c.params.a << " lambda=" << c.params.lambda
              << " rho=" << br.rho << (is_optimal(c.params, c.d) ? " optimal" : "") << "\n";
  });

  // encode: message -> codeword.
  auto* encode_cmd = sub("encode", "encode a message with a code descriptor");
  std::string enc_code, enc_in = "-", enc_message;
  encode_cmd->add_option("--code", enc_code, "descriptor JSON file (- for stdin)")->required();
  encode_cmd->add_option("--in", enc_in, "message JSON file (- for stdin, default)");
  encode_cmd->add_option("--message", enc_message, "inline comma-separated message");
  encode_cmd->callback([&] {
    apply_jobs();
    if (enc_message.empty() && enc_code == "-" && enc_in == "-")
      fail(Errc::BadInput, "--code and --in cannot both read stdin");
    CodeInstance c = load_code(enc_code);
    std::vector<Elem> msg;
    if (!enc_message.empty())
      msg = parse_coeffs(enc_message, "--message");
    else
      msg = message_from_json(load_json(enc_in));
    std::vector<Elem> cw = encode(c, msg);
    emit(Json{{"schema", kSchema}, {"word", cw}});
    std::cerr << "encoded " << msg.size() << " symbols into " << cw.size() << "\n";
  });

  // repair: word with nulls -> repaired word plus the plan that fixed it.
  auto* repair_cmd = sub("repair", "repair erased positions of a word");
  std::string rep_code, rep_in = "-";
  repair_cmd->add_option("--code", rep_code, "descriptor JSON file (- for stdin)")->required();
  repair_cmd->add_option("--in", rep_in, "word JSON file, null = erased (- for stdin, default)");
  repair_cmd->callback([&] {
    apply_jobs();
    if (rep_code == "-" && rep_in == "-")
      fail(Errc::BadInput, "--code and --in cannot both read stdin");
    CodeInstance c = load_code(rep_code);
    auto [word, pattern] = word_from_json(load_json(rep_in), c.n());
    RepairPlan plan = plan_repair(c, pattern);
    std::vector<Elem> fixed = repair(c, word, pattern);
    emit(Json{{"schema", kSchema}, {"word", fixed}, {"plan", plan_to_json(plan)}});
    std::cerr << "repaired " << pattern.erased.size() << " symbols in " << plan.steps.size()
              << " steps, " << plan.total_access << " helpers\n";
  });

  // verify: audit a descriptor; exit 4 when any check fails.
  auto* verify_cmd = sub("verify", "audit a code descriptor");
  std::string ver_code, ver_mode = "auto";
  DistanceOptions ver_opt;
  verify_cmd->add_option("--code", ver_code, "descriptor JSON file (- for stdin)")->required();
  verify_cmd->add_option("--mode", ver_mode, "distance scan mode: auto or paranoid")
      ->check(CLI::IsMember({"auto", "paranoid"}));
  verify_cmd->add_option("--full-scan-limit", ver_opt.full_scan_limit,
                         "message count above which the scan may stop at a witness");
  verify_cmd->add_option("--scan-cap", ver_opt.cap, "hard ceiling on scanned messages");
  verify_cmd->callback([&] {
    apply_jobs();
    CodeInstance c = load_code(ver_code);
    ver_opt.mode = ver_mode == "paranoid" ? ScanMode::Paranoid : ScanMode::Auto;
    ver_opt.jobs = jobs;
    VerifyReport rep = verify_instance(c, ver_opt);
    emit(verify_report_to_json(rep));
    for (const CheckItem& ck : rep.checks)
      std::cerr << (ck.pass ? "  ok  " : " FAIL ") << ck.name
                << (ck.detail.empty() ? "" : ": " + ck.detail) << "\n";
    if (!rep.all_pass()) {
      std::cerr << "verification failed\n";
      exit_code = 4;
    } else {
      std::cerr << "all checks passed\n";
    }
  });

  // bound: evaluate the distance bound for explicit parameters.
  auto* bound_cmd = sub("bound", "evaluate the distance bound for parameters");
  HlrcParams bp;
  std::int64_t bound_d = -1;
  bound_cmd->add_option("--n", bp.n, "code length")->required();
  bound_cmd->add_option("--k", bp.k, "dimension")->required();
  bound_cmd->add_option("--b", bp.b, "sub-nest locality")->required();
  bound_cmd->add_option("--a", bp.a, "nest locality")->required();
  bound_cmd->add_option("--lambda", bp.lambda, "nest-level erasure budget")->required();
  bound_cmd->add_option("--d", bound_d, "achieved distance (adds the optimality flag)");
  bound_cmd->callback([&] {
    BoundReport br = hlrc_bound(bp);
    if (bound_d >= 0) br.optimal = is_optimal(bp, bound_d);
    emit(bound_report_to_json(br));
    std::cerr << "d <= " << br.d_max_hlrc << " (classical " << br.d_max_classical << ")\n";
  });

  // simulate: seeded failure rounds against a descriptor.
  auto* sim_cmd = sub("simulate", "run seeded erasure rounds against a code");
  std::string sim_code, sim_scenario, sim_scattered;
  Scenario sc;
  sim_cmd->add_option("--code", sim_code, "descriptor JSON file (- for stdin)")->required();
  sim_cmd->add_option("--scenario", sim_scenario, "scenario JSON file (- for stdin)");
  sim_cmd->add_option("--seed", sc.seed, "base seed");
  sim_cmd->add_option("--rounds", sc.rounds, "number of rounds (default 1000)");
  sim_cmd->add_option("--single", sc.mix.single, "weight of single-erasure events");
  sim_cmd->add_option("--lambda-subnest", sc.mix.lambda_subnest,
                      "weight of full-budget erasures inside one sub-nest");
  sim_cmd->add_option("--lambda-nest", sc.mix.lambda_nest,
                      "weight of full-budget erasures spread over one nest");
  sim_cmd->add_option("--scattered", sim_scattered,
                      "scattered events as count:weight pairs, e.g. 8:1,3:0.5");
  sim_cmd->callback([&] {
    apply_jobs();
    if (sim_code == "-" && sim_scenario == "-")
      fail(Errc::BadInput, "--code and --scenario cannot both read stdin");
    CodeInstance c = load_code(sim_code);
    bool have_seed = sim_cmd->count("--seed") > 0;
    bool have_rounds = sim_cmd->count("--rounds") > 0;
    bool have_mix = sim_cmd->count("--single") || sim_cmd->count("--lambda-subnest") ||
                    sim_cmd->count("--lambda-nest") || !sim_scattered.empty();
    if (!sim_scenario.empty()) {
      if (have_mix) fail(Errc::BadInput, "event mix flags conflict with --scenario");
      Scenario from_file = scenario_from_json(load_json(sim_scenario));
      if (!have_seed) sc.seed = from_file.seed;
      if (!have_rounds) sc.rounds = from_file.rounds;
      sc.mix = from_file.mix;
    } else if (!have_rounds) {
      sc.rounds = 1000;
    }
    if (!sim_scattered.empty()) {
      std::istringstream in(sim_scattered);
      std::string item;
      while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        try {
          if (colon == std::string::npos) throw std::invalid_argument(item);
          sc.mix.scattered[std::stoll(item.substr(0, colon))] =
              std::stod(item.substr(colon + 1));
        } catch (...) {
          fail(Errc::BadInput, "--scattered: bad entry \"" + item + "\"");
        }
      }
    }
    if (sim_scenario.empty() && !have_mix)
      sc.mix.single = sc.mix.lambda_subnest = sc.mix.lambda_nest = 1;
    SimReport rep = simulate(c, sc, jobs);
    emit(sim_report_to_json(rep));
    std::cerr << rep.rounds << " rounds, " << rep.repaired_symbols << " symbols repaired, "
              << rep.failures << " failures\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
    return errc_is_validation(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
