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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "exq/verify.hpp"
#include "test_util.hpp"

using namespace exq;

namespace {

SweepConfig mod_cfg(std::size_t n, std::size_t m) { return {Family::Mod, n, m, 0, 0, {}}; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("family names") {
  for (auto f : {Family::Mod, Family::Exact0L, Family::Exact1, Family::NonEvasive})
    CHECK(parse_family(to_string(f)) == f);
  CHECK(parse_family("EXACT1TOP") == Family::Exact1);
  CHECK(parse_family("MOD") == Family::Mod);
  EXQ_CHECK_THROWS_KIND(parse_family("and"), ErrorKind::Parse);
}

TEST_CASE("sweep examples") {
  const auto r = sweep(mod_cfg(8, 3), SweepMode::exhaustive());
  CHECK(r.inputs_checked == 256);
  CHECK(r.failure_count == 0);
  CHECK(r.failures.empty());
  CHECK(r.passed());
  CHECK(r.max_queries_observed == 6);
  CHECK(r.min_queries_observed == 6);
  CHECK(r.bound == 6);
  CHECK(r.lower_bound == 6);
  CHECK(r.fully_simulated_fraction == 1.0);

  const auto e = sweep({Family::Exact1, 4, 0, 0, 0, {}}, SweepMode::exhaustive());
  CHECK(e.inputs_checked == 16);
  CHECK(e.passed());
  CHECK(e.max_queries_observed == 2);

  const auto p = sweep(mod_cfg(2, 2), SweepMode::exhaustive());
  CHECK(p.inputs_checked == 4);
  CHECK(p.max_queries_observed == 1);
}

TEST_CASE("sweep parameter checks") {
  SweepOptions o;
  o.exhaustive_cap = 10;
  EXQ_CHECK_THROWS_KIND(sweep(mod_cfg(11, 3), SweepMode::exhaustive(), o), ErrorKind::InvalidParameter);
  try {
    sweep(mod_cfg(25, 3), SweepMode::exhaustive());
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("sampled") != std::string::npos);
  }
  EXQ_CHECK_THROWS_KIND(sweep(mod_cfg(4, 5), SweepMode::exhaustive()), ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(sweep({Family::Exact0L, 4, 0, 1, 0, {}}, SweepMode::exhaustive()),
                        ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(sweep({Family::Exact1, 3, 0, 0, 0, {}}, SweepMode::exhaustive()),
                        ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(sweep({Family::NonEvasive, 4, 0, 0, 2, {0, 0, 0, 0, 1}}, SweepMode::exhaustive()),
                        ErrorKind::PromiseViolated);
  EXQ_CHECK_THROWS_KIND(sweep({Family::NonEvasive, 4, 0, 0, 2, {0, 0, 0}}, SweepMode::exhaustive()),
                        ErrorKind::InvalidParameter);
}

TEST_CASE("sampled sweeps are deterministic and parallel equals serial") {
  const auto mode = SweepMode::sampled(3000, 42);
  SweepOptions serial;
  SweepOptions par;
  par.threads = 4;
  for (const auto& cfg : {mod_cfg(20, 7), SweepConfig{Family::Exact1, 13, 0, 0, 0, {}},
                          SweepConfig{Family::Exact0L, 14, 0, 5, 0, {}}}) {
    const auto a = sweep(cfg, mode, serial);
    const auto b = sweep(cfg, mode, serial);
    const auto c = sweep(cfg, mode, par);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.inputs_checked == 3000);
    CHECK(a.passed());
    CHECK(reports_to_csv({a}) == reports_to_csv({c}));
    CHECK(reports_to_json({a}) == reports_to_json({c}));
  }
  const auto d = sweep(mod_cfg(20, 7), SweepMode::sampled(3000, 43));
  CHECK(d.mode.seed == 43);
}

TEST_CASE("exhaustive parallel sweep equals serial") {
  SweepOptions par;
  par.threads = 3;
  const auto cfg = SweepConfig{Family::NonEvasive, 7, 0, 0, 3, random_promise_table(7, 3, 5).labels};
  CHECK(sweep(cfg, SweepMode::exhaustive()) == sweep(cfg, SweepMode::exhaustive(), par));
}

TEST_CASE("sweep_all covers every family and passes") {
  const auto reports = sweep_all(6, SweepMode::exhaustive(), {}, 2);
  bool seen[4] = {};
  for (const auto& r : reports) {
    seen[static_cast<int>(r.config.family)] = true;
    CHECK(r.passed());
    CHECK(r.max_queries_observed <= r.bound);
    // Lower bounds are worst-case: the costliest input must reach them.
    if (r.lower_bound) CHECK(static_cast<long>(r.max_queries_observed) >= *r.lower_bound);
  }
  for (bool s : seen) CHECK(s);
  EXQ_CHECK_THROWS_KIND(sweep_all(1, SweepMode::exhaustive()), ErrorKind::InvalidParameter);
}

TEST_CASE("trace examples") {
  const auto t = trace(mod_cfg(3, 3), BitString::parse("010"));
  CHECK(t.ends_with("\ndistribution: (0.000000, 1.000000, 0.000000)\n"));
  CHECK(t.find("query mod(0,3,1) x1") != std::string::npos);
  CHECK(t.find("index:") != std::string::npos);
  CHECK(t.find("fourier basis") != std::string::npos);

  const auto z = trace(mod_cfg(3, 3), BitString::parse("000"));
  std::size_t steps = 0, identity = 0;
  for (std::size_t p = z.find("step:"); p != std::string::npos; p = z.find("step:", p + 1)) ++steps;
  for (std::size_t p = z.find("[identity phases]"); p != std::string::npos;
       p = z.find("[identity phases]", p + 1))
    ++identity;
  CHECK(steps == 2);
  CHECK(identity == steps);

  const auto e = trace({Family::Exact0L, 4, 0, 2, 0, {}}, BitString::parse("1000"));
  const auto exit_pos = e.find("early exit at i=0");
  const auto charge_pos = e.find("cost-modeled exact-k");
  CHECK(exit_pos != std::string::npos);
  CHECK(charge_pos != std::string::npos);
  CHECK(exit_pos < charge_pos);

  EXQ_CHECK_THROWS_KIND(trace({Family::Exact0L, 4, 0, 7, 0, {}}, BitString::parse("1000")),
                        ErrorKind::InvalidParameter);
}

TEST_CASE("report serialization") {
  CHECK(reports_to_csv({}) == std::string(csv_header()) + "\n");

  const auto r = sweep(mod_cfg(5, 2), SweepMode::exhaustive());
  const auto csv = reports_to_csv({r});
  const auto row = csv.substr(csv.find('\n') + 1);
  CHECK(row.rfind("mod,5,2,0,0,,exhaustive,0,0,32,0,", 0) == 0);

  SweepReport failing = r;
  failing.failure_count = 2;
  failing.failures = {{"10100", 0, 1, "wrong output"}, {"00001", 1, -1, "error: a, \"b\""}};
  const auto reports = std::vector<SweepReport>{r, failing,
                                                sweep({Family::NonEvasive, 5, 0, 0, 2,
                                                       random_promise_table(5, 2, 8).labels},
                                                      SweepMode::sampled(50, 3))};
  const auto json = reports_to_json(reports);
  CHECK(reports_from_json(json) == reports);
  CHECK_FALSE(reports_from_json(json)[1].passed());
  CHECK(reports_to_csv({failing}).find("\"10100:0:1:wrong output|00001:1:-1:error: a, \"\"b\"\"\"") !=
        std::string::npos);

  EXQ_CHECK_THROWS_KIND(reports_from_json("{"), ErrorKind::Parse);
  EXQ_CHECK_THROWS_KIND(reports_from_json(R"({"schema":"other","schema_version":1,"reports":[]})"),
                        ErrorKind::Parse);
  EXQ_CHECK_THROWS_KIND(reports_from_json(R"({"schema":"exq.sweep-report","schema_version":2,"reports":[]})"),
                        ErrorKind::Parse);
  CHECK(parse_report_format("json") == ReportFormat::Json);
  EXQ_CHECK_THROWS_KIND(parse_report_format("xml"), ErrorKind::Parse);
}

TEST_CASE("report_emit") {
  const auto dir = std::filesystem::temp_directory_path() / "exq_report_test";
  std::filesystem::create_directories(dir);
  report_emit({}, ReportFormat::Csv, dir / "empty.csv");
  CHECK(slurp(dir / "empty.csv") == std::string(csv_header()) + "\n");

  const auto r = sweep(mod_cfg(4, 4), SweepMode::exhaustive());
  report_emit({r}, ReportFormat::Json, dir / "r.json");
  CHECK(reports_from_json(slurp(dir / "r.json")) == std::vector<SweepReport>{r});

  EXQ_CHECK_THROWS_KIND(report_emit({r}, ReportFormat::Csv, dir / "no" / "such" / "dir.csv"), ErrorKind::Io);
  std::filesystem::remove_all(dir);
}

TEST_CASE("truncated failure lists keep the total count") {
  // Only the first kMaxReportedFailures are listed; the total is kept.
  SweepReport r;
  r.failure_count = 250;
  for (std::size_t i = 0; i < kMaxReportedFailures; ++i) r.failures.push_back({"0", 0, 1, "x"});
  CHECK_FALSE(r.passed());
  const auto back = reports_from_json(reports_to_json({r}));
  CHECK(back.front().failure_count == 250);
  CHECK(back.front().failures.size() == kMaxReportedFailures);
}
