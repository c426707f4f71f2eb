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

// Timing harness pitting the production kernels against the slow reference
// implementations that the test suite trusts. Each row also cross-checks
// that both routes agree, so a wrong-but-fast kernel cannot hide here.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>

#include "hlrc/code.hpp"
#include "hlrc/nests.hpp"
#include "hlrc/oracle.hpp"
#include "hlrc/simfail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace hlrc;
using Clock = std::chrono::steady_clock;

template <typename F>
double ms(F&& body) {
  auto t0 = Clock::now();
  body();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, const std::string& config, double ref_ms, double kernel_ms,
         bool agree) {
  std::printf("%-22s %-34s %10.1f %10.1f %7.2fx  %s\n", name.c_str(), config.c_str(), ref_ms,
              kernel_ms, kernel_ms > 0 ? ref_ms / kernel_ms : 0.0, agree ? "agree" : "MISMATCH");
}

int hw_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--quick") quick = true;

  const int hw = hw_threads();
  std::printf("%d hardware threads\n", hw);
  std::printf("%-22s %-34s %10s %10s %8s\n", "kernel", "config", "ref ms", "kernel ms",
              "speedup");

  // Minimum distance: naive per-message re-encoding vs the incremental
  // enumeration kernel, both scanning the full message space.
  {
    auto f13 = make_field(13, 1, {});
    Poly f = Poly::monomial(f13, 1, 2), h = Poly::monomial(f13, 1, 3);
    std::int64_t s = quick ? 0 : 1;
    CodeInstance c = build_code(CodePlan{f13, f, h, s, 2, 2});
    std::int64_t d_ref = 0;
    double t_ref = ms([&] { d_ref = exact_distance_reference(c.g); });
    DistanceOptions opt;
    opt.mode = ScanMode::Paranoid;
    DistanceResult dr;
    double t_kernel = ms([&] { dr = exact_distance(c.g, -1, opt); });
    row("distance scan",
        "GF(13) n=" + std::to_string(c.n()) + " k=" + std::to_string(c.k()), t_ref, t_kernel,
        d_ref == dr.d && dr.exact);
  }

  // Totally split values: exhaustive per-value root counting vs the
  // single-pass fiber bucketing used everywhere else.
  {
    auto fp = make_field(quick ? 409 : 4093, 1, {});
    Poly f = Poly::monomial(fp, 1, 2), h = Poly::monomial(fp, 1, 3);
    std::vector<Elem> ref, fast;
    double t_ref = ms([&] { ref = split_values_reference(f, h); });
    double t_kernel = ms([&] { fast = split_values(f, h); });
    row("split values", "GF(" + std::to_string(fp->p()) + ") f=X^2 h=X^3", t_ref, t_kernel,
        ref == fast);
  }

  // Failure simulation: one worker vs all hardware threads, same seed.
  {
    auto f19 = make_field(19, 1, {});
    Poly f = Poly::monomial(f19, 1, 2), h = Poly::monomial(f19, 1, 3);
    CodeInstance c = build_code(CodePlan{f19, f, h, 1, 2, 3});
    Scenario sc;
    sc.seed = 42;
    sc.rounds = quick ? 2000 : 20000;
    sc.mix.single = 1;
    sc.mix.lambda_subnest = 1;
    sc.mix.scattered[8] = 1;
    SimReport serial, parallel;
    double t_ref = ms([&] { serial = simulate(c, sc, 1); });
    double t_kernel = ms([&] { parallel = simulate(c, sc, hw); });
    row("simulate", std::to_string(sc.rounds) + " rounds, toy code", t_ref, t_kernel,
        serial == parallel);
  }

  // Generator matrix fill: one worker vs all hardware threads.
  {
    auto fp = make_field(quick ? 409 : 4093, 1, {});
    Poly f = Poly::monomial(fp, 1, 2), h = Poly::monomial(fp, 1, 3);
    std::int64_t ell = (std::int64_t)split_values(f, h).size();
    CodePlan plan{fp, f, h, quick ? 19 : 99, 2, ell};
    std::optional<CodeInstance> c1, cn;
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    double t_ref = ms([&] { c1.emplace(build_code(plan)); });
#ifdef _OPENMP
    omp_set_num_threads(hw);
#endif
    double t_kernel = ms([&] { cn.emplace(build_code(plan)); });
    row("matrix fill",
        "GF(" + std::to_string(fp->p()) + ") k=" + std::to_string(c1->k()) + " n=" +
            std::to_string(c1->n()),
        t_ref, t_kernel, c1->g == cn->g);
  }

  return 0;
}
