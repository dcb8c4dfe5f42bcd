// Copyright 2026 The exq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// exq: verification sweeps, single-input traces and report emission.
//
//   exq verify mod --n 8 --m 3
//   exq verify nonevasive --n 6 --k 2 --func f.txt --format json --out r.json
//   exq sweep-all --max-n 8 --threads 4
//   exq trace --family mod --x 010

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exq/error.hpp"
#include "exq/verify.hpp"

namespace {

struct CommonFlags {
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::size_t threads = 1;
  std::size_t max_exhaustive = exq::kDefaultExhaustiveCap;
  bool timing = false;
  std::string backend = "factorized";
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--mode", f.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  app->add_option("--samples", f.samples, "inputs drawn in sampled mode");
  app->add_option("--seed", f.seed, "seed for sampled inputs and measurements");
  app->add_option("--out", f.out, "write the report here instead of stdout");
  app->add_option("--format", f.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--threads", f.threads, "worker threads per sweep")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-exhaustive", f.max_exhaustive,
                  "largest n allowed in exhaustive mode");
  app->add_flag("--timing", f.timing, "record wall time (reports stop being reproducible)");
  app->add_option("--backend", f.backend, "factorized, full or dense")
      ->check(CLI::IsMember({"factorized", "full", "dense"}));
}

exq::SweepMode to_mode(const CommonFlags& f) {
  return f.mode == "sampled" ? exq::SweepMode::sampled(f.samples, f.seed)
                             : exq::SweepMode{exq::SweepMode::Kind::Exhaustive, 0, f.seed};
}

exq::SweepOptions to_options(const CommonFlags& f) {
  exq::SweepOptions o;
  o.threads = f.threads;
  o.exhaustive_cap = f.max_exhaustive;
  o.timing = f.timing;
  o.backend = f.backend == "full"    ? exq::Backend::Full
              : f.backend == "dense" ? exq::Backend::Dense
                                     : exq::Backend::Factorized;
  return o;
}

void summarize(const exq::SweepReport& r) {
  const auto& c = r.config;
  std::string params;
  switch (c.family) {
    case exq::Family::Mod:
      params = " m=" + std::to_string(c.m);
      break;
    case exq::Family::Exact0L:
      params = " l=" + std::to_string(c.l);
      break;
    case exq::Family::Exact1:
      break;
    case exq::Family::NonEvasive:
      params = " k=" + std::to_string(c.k);
      break;
  }
  std::fprintf(stderr, "%s %s n=%zu%s: %llu inputs, %llu failures, queries %zu..%zu, %s %zu\n",
               r.passed() ? "PASS" : "FAIL", std::string(exq::to_string(c.family)).c_str(),
               c.n, params.c_str(), static_cast<unsigned long long>(r.inputs_checked),
               static_cast<unsigned long long>(r.failure_count), r.min_queries_observed,
               r.max_queries_observed, r.bound_is_exact ? "required" : "budget", r.bound);
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
    const auto& f = r.failures[i];
    std::fprintf(stderr, "  x=%s expected=%ld got=%ld: %s\n", f.input.c_str(), f.expected,
                 f.got, f.reason.c_str());
  }
}

int emit(const std::vector<exq::SweepReport>& reports, const CommonFlags& f) {
  bool ok = true;
  for (const auto& r : reports) {
    summarize(r);
    ok = ok && r.passed();
  }
  const auto format = exq::parse_report_format(f.format);
  if (f.out.empty())
    std::cout << (format == exq::ReportFormat::Csv ? exq::reports_to_csv(reports)
                                                   : exq::reports_to_json(reports));
  else
    exq::report_emit(reports, format, f.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum query algorithms for symmetric functions: "
               "state-vector verification sweeps and traces"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "sweep one algorithm family");
  verify->require_subcommand(1);

  CommonFlags flags;
  exq::SweepConfig cfg;
  std::string func_path;

  auto* v_mod = verify->add_subcommand("mod", "|x| mod m");
  v_mod->add_option("--n", cfg.n)->required();
  v_mod->add_option("--m", cfg.m)->required();
  add_common(v_mod, flags);

  auto* v_e0l = verify->add_subcommand("exact0l", "[|x| in {0, l}]");
  v_e0l->add_option("--n", cfg.n)->required();
  v_e0l->add_option("--l", cfg.l)->required();
  add_common(v_e0l, flags);

  auto* v_e1 = verify->add_subcommand("exact1", "[|x| in {1, n-1}]");
  v_e1->add_option("--n", cfg.n)->required();
  add_common(v_e1, flags);

  auto* v_ne = verify->add_subcommand("nonevasive", "F(|x|) with F(0)=F(k), F(n-k)=F(n)");
  v_ne->add_option("--n", cfg.n)->required();
  v_ne->add_option("--k", cfg.k)->required();
  v_ne->add_option("--func", func_path, "function-spec file")->required();
  add_common(v_ne, flags);

  std::size_t max_n = 0;
  std::size_t tables = 3;
  auto* all = app.add_subcommand("sweep-all", "every family for n up to --max-n");
  all->add_option("--max-n", max_n)->required();
  all->add_option("--tables", tables, "random promise tables per (n, k)");
  add_common(all, flags);

  std::string family_name;
  std::string bits;
  auto* tr = app.add_subcommand("trace", "step-by-step run on one input");
  tr->add_option("--family", family_name, "mod, exact0l, exact1, nonevasive")->required();
  tr->add_option("--x", bits, "input bits x_0 x_1 ...")->required();
  tr->add_option("--m", cfg.m, "modulus (default n)");
  tr->add_option("--l", cfg.l);
  tr->add_option("--k", cfg.k);
  tr->add_option("--func", func_path, "function-spec file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tr->parsed()) {
      const exq::BitString x = exq::BitString::parse(bits);
      cfg.family = exq::parse_family(family_name);
      cfg.n = x.size();
      if (cfg.family == exq::Family::Mod && cfg.m == 0) cfg.m = cfg.n;
      if (cfg.family == exq::Family::NonEvasive) {
        if (func_path.empty())
          throw exq::Error(exq::ErrorKind::InvalidParameter,
                           "trace of nonevasive needs --func");
        cfg.func = exq::load_function_spec(func_path).labels;
      }
      std::cout << exq::trace(cfg, x);
      return 0;
    }
    if (all->parsed())
      return emit(exq::sweep_all(max_n, to_mode(flags), to_options(flags), tables), flags);

    if (v_mod->parsed()) cfg.family = exq::Family::Mod;
    if (v_e0l->parsed()) cfg.family = exq::Family::Exact0L;
    if (v_e1->parsed()) cfg.family = exq::Family::Exact1;
    if (v_ne->parsed()) {
      cfg.family = exq::Family::NonEvasive;
      const auto f = exq::load_function_spec(func_path);
      if (f.n != cfg.n)
        throw exq::Error(exq::ErrorKind::DimensionMismatch,
                         "--func describes n=" + std::to_string(f.n) + " but --n is " +
                             std::to_string(cfg.n));
      cfg.func = f.labels;
    }
    return emit({exq::sweep(cfg, to_mode(flags), to_options(flags))}, flags);
  } catch (const exq::Error& e) {
    std::fprintf(stderr, "exq: %s error: %s\n", exq::to_string(e.kind()), e.what());
    return 2;
  }
}
