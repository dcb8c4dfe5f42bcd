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

#include "exq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "exq/bounds.hpp"
#include "exq/error.hpp"
#include "json.hpp"

namespace exq {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) {
  throw Error(ErrorKind::InvalidParameter, msg);
}

SymmetricFunction truth_table(const SweepConfig& c) {
  switch (c.family) {
    case Family::Mod:
      return builtin_table(FunctionFamily::mod(static_cast<long>(c.m)), c.n);
    case Family::Exact0L:
      return builtin_table(FunctionFamily::exact_pair(0, static_cast<long>(c.l)), c.n);
    case Family::Exact1:
      return builtin_table(
          FunctionFamily::exact_pair(1, static_cast<long>(c.n) - 1), c.n);
    case Family::NonEvasive:
      return SymmetricFunction(c.n, c.func);
  }
  bad("unknown family");
}

struct RunOutcome {
  std::size_t queries = 0;
  double exactness = 0.0;
  bool fully_simulated = true;
  std::optional<Failure> failure;
};

RunOutcome run_one(const SweepConfig& c, const SymmetricFunction& truth,
                   const SweepReport& proto, const BitString& x,
                   const SimulationOptions& sim) {
  RunOutcome out;
  const Label expected = eval_symmetric(truth, x);
  std::string reason;
  Label got = -1;
  try {
    AlgorithmResult res;
    std::optional<Exact1Result> e1;
    switch (c.family) {
      case Family::Mod:
        res = mod_general(x, c.m, sim);
        break;
      case Family::Exact0L:
        res = exact_zero_l(x, c.l, sim);
        break;
      case Family::Exact1: {
        auto [r, e] = exact_one_top(x, sim);
        res = std::move(r);
        e1 = std::move(e);
        break;
      }
      case Family::NonEvasive:
        res = nonevasive_eval(truth, c.k, x, sim);
        break;
    }
    got = res.output;
    out.queries = res.total_queries();
    out.exactness = res.exactness_evidence;
    out.fully_simulated = res.fully_simulated;

    if (got != expected) {
      reason = "wrong output";
    } else if (proto.bound_is_exact && out.queries != proto.bound) {
      reason = "used " + std::to_string(out.queries) + " queries, expected exactly " +
               std::to_string(proto.bound);
    } else if (!proto.bound_is_exact && out.queries > proto.bound) {
      reason = "used " + std::to_string(out.queries) + " queries, budget " +
               std::to_string(proto.bound);
    } else if (!(res.exactness_evidence <= kExactnessTol)) {
      reason = "non-exact measurement (off-peak mass " +
               std::to_string(res.exactness_evidence) + ")";
    } else if (!res.ledger.consistent()) {
      reason = "ledger counters disagree with trace";
    } else if (e1) {
      if (e1->in_promise != (got == 1)) {
        reason = "promise flag disagrees with output";
      } else if (e1->in_promise && e1->majority_indices.empty()) {
        reason = "no majority index reported";
      } else if (!e1->in_promise && !e1->majority_indices.empty()) {
        reason = "majority indices reported outside the promise";
      } else {
        for (std::size_t i : e1->majority_indices)
          if (i >= x.size() || !is_majority_index(x, i)) {
            reason = "invalid majority index " + std::to_string(i);
            break;
          }
      }
    }
  } catch (const Error& e) {
    reason = std::string("error: ") + e.what();
  }
  if (!reason.empty()) out.failure = Failure{x.to_string(), expected, got, reason};
  return out;
}

struct Partial {
  std::uint64_t count = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::pair<std::uint64_t, Failure>> failures;
  std::size_t max_q = 0;
  std::size_t min_q = std::numeric_limits<std::size_t>::max();
  double worst = 0.0;
  std::uint64_t fully = 0;

  void add(std::uint64_t key, RunOutcome&& r) {
    ++count;
    max_q = std::max(max_q, r.queries);
    min_q = std::min(min_q, r.queries);
    worst = std::max(worst, r.exactness);
    if (r.fully_simulated) ++fully;
    if (r.failure) {
      ++failure_count;
      if (failures.size() < kMaxReportedFailures)
        failures.emplace_back(key, std::move(*r.failure));
    }
  }

  // Associative and commutative: failures are re-sorted by input key.
  void merge(Partial&& o) {
    count += o.count;
    failure_count += o.failure_count;
    max_q = std::max(max_q, o.max_q);
    min_q = std::min(min_q, o.min_q);
    worst = std::max(worst, o.worst);
    fully += o.fully;
    for (auto& f : o.failures) failures.push_back(std::move(f));
    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (failures.size() > kMaxReportedFailures) failures.resize(kMaxReportedFailures);
  }
};

std::vector<std::uint64_t> sampled_masks(std::size_t n, const SweepMode& mode) {
  std::mt19937_64 gen(mode.seed);
  const std::uint64_t keep = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> masks(mode.samples);
  for (auto& m : masks) m = gen() & keep;
  return masks;
}

double clean(double v) { return std::abs(v) < 5e-7 ? 0.0 : v; }

std::string fmt_amp(const Complex& c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.6f,%.6f)", clean(c.real()), clean(c.imag()));
  return buf;
}

std::string fmt_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", clean(p));
  return buf;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class TraceWriter : public StepObserver {
 public:
  explicit TraceWriter(std::ostringstream& os) : os_(os) {}

  void on_query(const BitString& instance, std::size_t offset, std::size_t a,
                const CompositeState& st) override {
    const std::size_t m = instance.size();
    const auto prof = st.phase_profile();
    os_ << "step: oracle O_{x,a} a=" << a << " on " << m << "-slot instance at "
        << offset << ", phase register b=" << prof.dominant_b;
    if (prof.leak > 0) os_ << " (leak " << fmt_double(prof.leak) << ")";
    os_ << "\n  shifted bits x_{j-a}:";
    bool identity = true;
    for (std::size_t j = 0; j < m; ++j) {
      const unsigned bit = instance[(j + m - a) % m];
      identity = identity && (bit == 0 || prof.dominant_b == 0);
      os_ << ' ' << bit;
    }
    os_ << (identity ? "  [identity phases]" : "") << "\n  index:";
    const StateVector idx = st.index_slice(prof.dominant_b);
    for (std::size_t j = 0; j < m; ++j) os_ << ' ' << fmt_amp(idx[j]);
    os_ << '\n';
  }

  void on_measurement(const StateVector& index_state, const StateVector& coeffs,
                      const MeasurementOutcome& mo) override {
    os_ << "measure: pre-measurement index:";
    for (std::size_t j = 0; j < index_state.dim(); ++j)
      os_ << ' ' << fmt_amp(index_state[j]);
    os_ << "\n  fourier basis <phi_k|psi>:";
    for (std::size_t j = 0; j < coeffs.dim(); ++j) os_ << ' ' << fmt_amp(coeffs[j]);
    os_ << "\n  distribution:";
    for (double p : mo.distribution) os_ << ' ' << fmt_prob(p);
    os_ << "\n  outcome: " << mo.outcome << '\n';
    last_distribution_ = mo.distribution;
  }

  void on_event(const std::string& text) override { os_ << "event: " << text << '\n'; }

  const std::vector<double>& last_distribution() const { return last_distribution_; }

 private:
  std::ostringstream& os_;
  std::vector<double> last_distribution_;
};

json report_to_json(const SweepReport& r) {
  json j;
  j["family"] = std::string(to_string(r.config.family));
  j["n"] = r.config.n;
  j["m"] = r.config.m;
  j["l"] = r.config.l;
  j["k"] = r.config.k;
  j["func"] = r.config.func;
  j["mode"] = r.mode.kind == SweepMode::Kind::Exhaustive ? "exhaustive" : "sampled";
  j["samples"] = r.mode.samples;
  j["seed"] = r.mode.seed;
  j["inputs_checked"] = r.inputs_checked;
  j["failure_count"] = r.failure_count;
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"input", f.input},
                     {"expected", f.expected},
                     {"got", f.got},
                     {"reason", f.reason}});
  j["failures"] = std::move(fails);
  j["max_queries_observed"] = r.max_queries_observed;
  j["min_queries_observed"] = r.min_queries_observed;
  j["bound"] = r.bound;
  j["bound_is_exact"] = r.bound_is_exact;
  j["lower_bound"] = r.lower_bound ? json(*r.lower_bound) : json(nullptr);
  j["exactness_worst"] = r.exactness_worst;
  j["fully_simulated_fraction"] = r.fully_simulated_fraction;
  j["wall_time"] = r.wall_time;
  j["passed"] = r.passed();
  return j;
}

SweepReport report_from_json(const json& j) {
  SweepReport r;
  r.config.family = parse_family(j.at("family").get<std::string>());
  r.config.n = j.at("n").get<std::size_t>();
  r.config.m = j.at("m").get<std::size_t>();
  r.config.l = j.at("l").get<std::size_t>();
  r.config.k = j.at("k").get<std::size_t>();
  r.config.func = j.at("func").get<std::vector<Label>>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "exhaustive")
    r.mode.kind = SweepMode::Kind::Exhaustive;
  else if (mode == "sampled")
    r.mode.kind = SweepMode::Kind::Sampled;
  else
    throw Error(ErrorKind::Parse, "unknown sweep mode '" + mode + "'");
  r.mode.samples = j.at("samples").get<std::uint64_t>();
  r.mode.seed = j.at("seed").get<std::uint64_t>();
  r.inputs_checked = j.at("inputs_checked").get<std::uint64_t>();
  r.failure_count = j.at("failure_count").get<std::uint64_t>();
  for (const auto& f : j.at("failures"))
    r.failures.push_back({f.at("input").get<std::string>(), f.at("expected").get<Label>(),
                          f.at("got").get<Label>(), f.at("reason").get<std::string>()});
  r.max_queries_observed = j.at("max_queries_observed").get<std::size_t>();
  r.min_queries_observed = j.at("min_queries_observed").get<std::size_t>();
  r.bound = j.at("bound").get<std::size_t>();
  r.bound_is_exact = j.at("bound_is_exact").get<bool>();
  if (!j.at("lower_bound").is_null()) r.lower_bound = j.at("lower_bound").get<long>();
  r.exactness_worst = j.at("exactness_worst").get<double>();
  r.fully_simulated_fraction = j.at("fully_simulated_fraction").get<double>();
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Mod:
      return "mod";
    case Family::Exact0L:
      return "exact0l";
    case Family::Exact1:
      return "exact1";
    case Family::NonEvasive:
      return "nonevasive";
  }
  return "unknown";
}

Family parse_family(std::string_view raw) {
  std::string name(raw);
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "mod") return Family::Mod;
  if (name == "exact0l") return Family::Exact0L;
  if (name == "exact1" || name == "exact1top") return Family::Exact1;
  if (name == "nonevasive") return Family::NonEvasive;
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(raw) +
                                    "' (expected mod, exact0l, exact1, nonevasive)");
}

SweepReport prepare_report(const SweepConfig& c, const SweepMode& mode) {
  SweepReport r;
  r.config = c;
  r.mode = mode;
  const long n = static_cast<long>(c.n);
  if (c.n < 1 || c.n > kMaxRegisterDim) bad("n must be in [1, 64]");
  switch (c.family) {
    case Family::Mod:
      if (c.m < 1 || c.m > c.n) bad("mod needs 1 <= m <= n");
      r.bound = c.m == 1 ? 0 : static_cast<std::size_t>(lb_mod(n, static_cast<long>(c.m)));
      r.bound_is_exact = true;
      if (c.m > 1) r.lower_bound = lb_mod(n, static_cast<long>(c.m));
      break;
    case Family::Exact0L:
      if (c.l < 2 || c.l > c.n) bad("exact0l needs 2 <= l <= n");
      r.bound = c.n - 1;
      r.lower_bound = lb_exact_kl(n, 0, static_cast<long>(c.l));
      break;
    case Family::Exact1:
      if (c.n < 4) bad("exact1 needs n >= 4");
      r.bound = c.n - 2;
      r.lower_bound = lb_exact_kl(n, 1, n - 1);
      break;
    case Family::NonEvasive: {
      if (c.k < 1 || c.k > c.n) bad("nonevasive needs 1 <= k <= n");
      const SymmetricFunction f(c.n, c.func);
      if (!validate_nonevasive_promise(f, c.k))
        throw Error(ErrorKind::PromiseViolated,
                    "function table violates F(0)=F(k), F(n-k)=F(n) for k=" +
                        std::to_string(c.k));
      r.bound = c.n - 1;
      break;
    }
  }
  return r;
}

SweepReport sweep(const SweepConfig& config, const SweepMode& mode,
                  const SweepOptions& options) {
  SweepReport report = prepare_report(config, mode);
  const std::size_t n = config.n;
  std::vector<std::uint64_t> masks;
  std::uint64_t total;
  if (mode.kind == SweepMode::Kind::Exhaustive) {
    if (n > options.exhaustive_cap)
      bad("exhaustive sweep over 2^" + std::to_string(n) +
          " inputs exceeds the cap n <= " + std::to_string(options.exhaustive_cap) +
          "; use sampled mode or raise the cap");
    total = std::uint64_t{1} << n;
  } else {
    masks = sampled_masks(n, mode);
    total = masks.size();
  }

  const SymmetricFunction truth = truth_table(config);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t workers = static_cast<std::size_t>(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(std::max<std::size_t>(options.threads, 1), total)));

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    Partial p;
    SimulationOptions sim;
    sim.backend = options.backend;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t mask = masks.empty() ? i : masks[i];
      sim.seed = mode.seed ^ (i * 0x9E3779B97F4A7C15ull);
      p.add(i, run_one(config, truth, report, BitString::from_mask(mask, n), sim));
    }
    return p;
  };

  Partial all;
  if (workers == 1) {
    all = run_range(0, total);
  } else {
    std::vector<Partial> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min<std::uint64_t>(total, w * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(total, b + chunk);
      pool.emplace_back([&, w, b, e] { parts[w] = run_range(b, e); });
    }
    for (auto& t : pool) t.join();
    for (auto& p : parts) all.merge(std::move(p));
  }

  report.inputs_checked = all.count;
  report.failure_count = all.failure_count;
  for (auto& f : all.failures) report.failures.push_back(std::move(f.second));
  report.max_queries_observed = all.max_q;
  report.min_queries_observed = all.count ? all.min_q : 0;
  report.exactness_worst = all.worst;
  report.fully_simulated_fraction =
      all.count ? static_cast<double>(all.fully) / static_cast<double>(all.count) : 1.0;
  if (options.timing)
    report.wall_time = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return report;
}

std::vector<SweepReport> sweep_all(std::size_t max_n, const SweepMode& mode,
                                   const SweepOptions& options,
                                   std::size_t tables_per_k) {
  if (max_n < 2) bad("sweep-all needs max n >= 2");
  std::vector<SweepReport> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t m = 2; m <= n; ++m)
      out.push_back(sweep({Family::Mod, n, m, 0, 0, {}}, mode, options));
    if (n >= 3)
      for (std::size_t l = 2; l <= n; ++l)
        out.push_back(sweep({Family::Exact0L, n, 0, l, 0, {}}, mode, options));
    if (n >= 4) out.push_back(sweep({Family::Exact1, n, 0, 0, 0, {}}, mode, options));
    if (n >= 3)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t t = 0; t < tables_per_k; ++t) {
          const std::uint64_t seed =
              mode.seed ^ ((static_cast<std::uint64_t>(n) << 32) | (k << 16) | t);
          out.push_back(sweep({Family::NonEvasive, n, 0, 0, k,
                               random_promise_table(n, k, seed).labels},
                              mode, options));
        }
  }
  return out;
}

std::string trace(const SweepConfig& config, const BitString& x) {
  SweepConfig c = config;
  c.n = x.size();
  const SweepReport proto = prepare_report(c, SweepMode::exhaustive());
  const SymmetricFunction truth = truth_table(c);

  std::ostringstream os;
  os << "trace family=" << to_string(c.family) << " n=" << c.n;
  switch (c.family) {
    case Family::Mod:
      os << " m=" << c.m;
      break;
    case Family::Exact0L:
      os << " l=" << c.l;
      break;
    case Family::Exact1:
      break;
    case Family::NonEvasive:
      os << " k=" << c.k << " F=";
      for (std::size_t i = 0; i < c.func.size(); ++i) os << (i ? "," : "") << c.func[i];
      break;
  }
  os << " x=" << x.to_string() << '\n';

  TraceWriter writer(os);
  SimulationOptions sim;
  sim.observer = &writer;
  AlgorithmResult res;
  std::optional<Exact1Result> e1;
  switch (c.family) {
    case Family::Mod:
      res = mod_general(x, c.m, sim);
      break;
    case Family::Exact0L:
      res = exact_zero_l(x, c.l, sim);
      break;
    case Family::Exact1: {
      auto [r, e] = exact_one_top(x, sim);
      res = std::move(r);
      e1 = std::move(e);
      break;
    }
    case Family::NonEvasive:
      res = nonevasive_eval(truth, c.k, x, sim);
      break;
  }

  os << "ledger:\n";
  for (const auto& e : res.ledger.trace()) os << "  " << e.render() << '\n';
  if (e1 && e1->in_promise) {
    os << "majority indices:";
    for (auto i : e1->majority_indices) os << ' ' << i;
    os << '\n';
  }
  os << "result: output=" << res.output << " expected=" << eval_symmetric(truth, x)
     << " queries=" << res.total_queries() << " (simulated=" << res.ledger.simulated()
     << ", cost_modeled=" << res.ledger.cost_modeled() << ", budget=" << proto.bound
     << ") exactness=" << fmt_double(res.exactness_evidence)
     << " fully_simulated=" << (res.fully_simulated ? "true" : "false") << '\n';
  os << "distribution: (";
  const auto& d = writer.last_distribution();
  for (std::size_t j = 0; j < d.size(); ++j) os << (j ? ", " : "") << fmt_prob(d[j]);
  os << ")\n";
  return os.str();
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw Error(ErrorKind::Parse, "unknown report format '" + std::string(name) + "'");
}

std::string_view csv_header() {
  return "family,n,m,l,k,func,mode,samples,seed,inputs_checked,failures,"
         "max_queries,min_queries,bound,bound_is_exact,lower_bound,"
         "exactness_worst,fully_simulated_fraction,wall_time,passed,"
         "failure_samples";
}

std::string reports_to_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const auto& r : reports) {
    std::string func;
    for (std::size_t i = 0; i < r.config.func.size(); ++i)
      func += (i ? ";" : "") + std::to_string(r.config.func[i]);
    std::string samples;
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
      const auto& f = r.failures[i];
      samples += (i ? "|" : "") + f.input + ":" + std::to_string(f.expected) + ":" +
                 std::to_string(f.got) + ":" + f.reason;
    }
    os << to_string(r.config.family) << ',' << r.config.n << ',' << r.config.m << ','
       << r.config.l << ',' << r.config.k << ',' << func << ','
       << (r.mode.kind == SweepMode::Kind::Exhaustive ? "exhaustive" : "sampled")
       << ',' << r.mode.samples << ',' << r.mode.seed << ',' << r.inputs_checked
       << ',' << r.failure_count << ',' << r.max_queries_observed << ','
       << r.min_queries_observed << ',' << r.bound << ','
       << (r.bound_is_exact ? "true" : "false") << ','
       << (r.lower_bound ? std::to_string(*r.lower_bound) : "") << ','
       << fmt_double(r.exactness_worst) << ',' << fmt_double(r.fully_simulated_fraction)
       << ',' << fmt_double(r.wall_time) << ',' << (r.passed() ? "true" : "false")
       << ',' << csv_quote(samples) << '\n';
  }
  return os.str();
}

std::string reports_to_json(const std::vector<SweepReport>& reports) {
  json root;
  root["schema"] = "exq.sweep-report";
  root["schema_version"] = kReportSchemaVersion;
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  root["reports"] = std::move(arr);
  return root.dump(2) + "\n";
}

std::vector<SweepReport> reports_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("report JSON: ") + e.what());
  }
  try {
    if (root.at("schema").get<std::string>() != "exq.sweep-report")
      throw Error(ErrorKind::Parse, "report JSON: unexpected schema");
    if (root.at("schema_version").get<int>() != kReportSchemaVersion)
      throw Error(ErrorKind::Parse, "report JSON: unsupported schema_version");
    std::vector<SweepReport> out;
    for (const auto& j : root.at("reports")) out.push_back(report_from_json(j));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("report JSON: ") + e.what());
  }
}

void report_emit(const std::vector<SweepReport>& reports, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write report: " + path.string());
  out << (format == ReportFormat::Csv ? reports_to_csv(reports)
                                      : reports_to_json(reports));
  if (!out) throw Error(ErrorKind::Io, "failed writing report: " + path.string());
}

}  // namespace exq
