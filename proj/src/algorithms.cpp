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

#include "exq/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "exq/error.hpp"
#include "exq/kernels.hpp"

namespace exq {
namespace {

struct InstanceTag {
  const char* label;
  StepKind kind;
  long long p0;
  long long p1;
  /// Classical-bit queries carry only p0.
  bool short_form = false;
};

// Per-run state: one ledger, one measurement RNG, the exactness record.
class RunContext {
 public:
  explicit RunContext(const SimulationOptions& opts)
      : opts_(opts), rng_(opts.seed) {}

  const SimulationOptions& opts() const { return opts_; }
  QueryLedger& ledger() { return ledger_; }
  StepObserver* observer() const { return opts_.observer; }

  std::uint64_t next_seed() { return rng_(); }
  void observe_exactness(double off_peak) {
    exactness_ = std::max(exactness_, off_peak);
  }
  void observe_leak(double leak) { leak_ = std::max(leak_, leak); }
  void mark_cost_modeled() { fully_simulated_ = false; }

  void note(const std::string& text) {
    ledger_.record(StepKind::Note, text);
    if (observer()) observer()->on_event(text);
  }

  double leak() const { return leak_; }

  AlgorithmResult finish(Label output) {
    AlgorithmResult r;
    r.output = output;
    r.ledger = std::move(ledger_);
    r.exactness_evidence = exactness_;
    r.fully_simulated = fully_simulated_;
    r.max_phase_register_leak = leak_;
    return r;
  }

  QueryLedger take_ledger() { return std::move(ledger_); }

 private:
  const SimulationOptions& opts_;
  QueryLedger ledger_;
  std::mt19937_64 rng_;
  double exactness_ = 0.0;
  double leak_ = 0.0;
  bool fully_simulated_ = true;
};

void require_input_size(const BitString& x) {
  if (x.size() > kMaxRegisterDim)
    throw Error(ErrorKind::InvalidDimension,
                "inputs longer than 64 bits are not supported");
}

CompositeState initial_state(std::size_t m, Backend backend) {
  if (backend == Backend::Factorized)
    return CompositeState::factorized(StateVector::uniform(m), 0);
  // uniform (x) |0>
  std::vector<Complex> a(m * m);
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t j = 0; j < m; ++j) a[j * m] = amp;
  return CompositeState::full(m, StateVector(std::move(a)));
}

// The MOD_m^m circuit on an m-bit sub-instance, m >= 2: start from
// uniform (x) |0>; for a = 1..m-1 shift the phase register by one and apply
// the shifted phase oracle O_{x,a}. Returns the pre-measurement state.
CompositeState run_circuit(const BitString& sub, const InstanceTag& tag,
                           RunContext& ctx) {
  const std::size_t m = sub.size();
  const Backend backend = ctx.opts().backend;
  CompositeState st = initial_state(m, backend);
  for (std::size_t a = 1; a < m; ++a) {
    st.shift_phase_register(1);
    if (backend == Backend::Dense)
      st.apply_dense(dense_query_operator(sub, a));
    else
      st.apply_shifted_phase_oracle(sub, a);
    if (tag.short_form)
      ctx.ledger().charge(ChargeKind::Simulated, 1, tag.label, {tag.p0},
                          tag.kind);
    else
      ctx.ledger().charge(ChargeKind::Simulated, 1, tag.label,
                          {tag.p0, tag.p1, static_cast<long long>(a)}, tag.kind);
    if (!st.is_factorized()) ctx.observe_leak(st.phase_profile().leak);
    if (ctx.observer())
      ctx.observer()->on_query(sub, static_cast<std::size_t>(tag.p0), a, st);
  }
  return st;
}

StateVector dominant_index_state(const CompositeState& st) {
  if (st.is_factorized()) return st.storage();
  return st.index_slice(st.phase_profile().dominant_b);
}

// Fourier-basis measurement of the index register.
std::size_t measure(const CompositeState& st, RunContext& ctx) {
  const std::size_t m = st.n();
  StateVector index_state = dominant_index_state(st);
  std::vector<double> p;
  if (st.is_factorized()) {
    p = fourier_distribution(index_state);
  } else {
    // Marginal over the phase register.
    p.assign(m, 0.0);
    std::vector<double> pb(m);
    for (std::size_t b = 0; b < m; ++b) {
      const StateVector c = fourier_coefficients(st.index_slice(b));
      kernels::active().abs_sq(c.amplitudes().data(), pb.data(), m);
      for (std::size_t j = 0; j < m; ++j) p[j] += pb[j];
    }
  }
  double total = 0.0;
  for (double v : p) total += v;
  if (std::abs(total - 1.0) > kNormTol)
    throw Error(ErrorKind::NotNormalized, "measurement distribution sums to " +
                                              std::to_string(total));
  MeasurementOutcome mo{sample_outcome(p, ctx.next_seed()), std::move(p)};
  ctx.observe_exactness(mo.off_peak_mass());
  ctx.ledger().record(StepKind::Measurement, "fourier",
                      {static_cast<long long>(m),
                       static_cast<long long>(mo.outcome)});
  if (ctx.observer())
    ctx.observer()->on_measurement(index_state, fourier_coefficients(index_state),
                                   mo);
  return mo.outcome;
}

// |sub| mod |sub|. A one-bit sub-instance has modulus 1: 0 with no queries.
std::size_t mod_residue(const BitString& sub, std::size_t offset,
                        RunContext& ctx) {
  if (sub.size() <= 1) return 0;
  const CompositeState st = run_circuit(
      sub,
      {"mod", StepKind::Query, static_cast<long long>(offset),
       static_cast<long long>(sub.size())},
      ctx);
  return measure(st, ctx);
}

// x_i via a two-slot oracle holding (x_i, 0): one query, outcome x_i.
unsigned classical_bit(const BitString& x, std::size_t i, RunContext& ctx) {
  const BitString sub(std::vector<std::uint8_t>{static_cast<std::uint8_t>(x[i]), 0});
  const CompositeState st = run_circuit(
      sub, {"x", StepKind::ClassicalBit, static_cast<long long>(i), 0, true}, ctx);
  return static_cast<unsigned>(measure(st, ctx));
}

// x_i XOR x_j via the 2-bit circuit: one query.
unsigned parity_bits(const BitString& x, std::size_t i, std::size_t j,
                     std::size_t offset, RunContext& ctx) {
  const BitString sub(std::vector<std::uint8_t>{static_cast<std::uint8_t>(x[i]),
                                                static_cast<std::uint8_t>(x[j])});
  const CompositeState st = run_circuit(
      sub,
      {"xor", StepKind::Query, static_cast<long long>(offset + i),
       static_cast<long long>(offset + j)},
      ctx);
  return static_cast<unsigned>(measure(st, ctx));
}

bool exact_k_in_context(const BitString& x_sub, std::size_t k, RunContext& ctx) {
  ctx.mark_cost_modeled();
  return subroutine_exact_k(x_sub, k, ctx.ledger());
}

Exact1Result exact_one_recursive(const BitString& x, std::size_t offset,
                                 RunContext& ctx) {
  const std::size_t n = x.size();
  Exact1Result r;
  if (n == 4) {
    const unsigned p01 = parity_bits(x, 0, 1, offset, ctx);
    const unsigned p23 = parity_bits(x, 2, 3, offset, ctx);
    if (p01 == 0 && p23 == 1) {
      r.in_promise = true;
      r.majority_indices = {offset, offset + 1};
    } else if (p01 == 1 && p23 == 0) {
      r.in_promise = true;
      r.majority_indices = {offset + 2, offset + 3};
    }
    return r;
  }
  if (n == 5) {
    ctx.mark_cost_modeled();
    const auto [bit, pair] = subroutine_exact_14_5(x, ctx.ledger());
    if (bit) {
      r.in_promise = true;
      for (std::size_t i = 0; i < 5; ++i)
        if (i != pair->first && i != pair->second)
          r.majority_indices.push_back(offset + i);
    }
    return r;
  }
  const BitString rest = x.substr(2, n - 2);
  if (parity_bits(x, 0, 1, offset, ctx) == 1) {
    // |x_2..x_{n-1}| in {0, n-2} iff its residue mod n-2 is 0.
    if (mod_residue(rest, offset + 2, ctx) == 0) {
      r.in_promise = true;
      for (std::size_t i = 2; i < n; ++i) r.majority_indices.push_back(offset + i);
    }
    return r;
  }
  const Exact1Result sub = exact_one_recursive(rest, offset + 2, ctx);
  if (!sub.in_promise) return r;
  const std::size_t pivot = sub.majority_indices.front() - offset;
  if (parity_bits(x, 0, pivot, offset, ctx) == 0) {
    r.in_promise = true;
    r.majority_indices = {offset, offset + 1};
    r.majority_indices.insert(r.majority_indices.end(),
                              sub.majority_indices.begin(),
                              sub.majority_indices.end());
  }
  return r;
}

}  // namespace

bool is_majority_index(const BitString& x, std::size_t i) {
  const std::size_t w2 = 2 * x.weight();
  const unsigned bit = x.at(i);
  if (w2 > x.size()) return bit == 1;
  if (w2 < x.size()) return bit == 0;
  return false;
}

StateVector ModFullSimulation::index_state() const {
  return dominant_index_state(final_state);
}

ModFullSimulation simulate_mod_full(const BitString& x,
                                    const SimulationOptions& opts) {
  require_input_size(x);
  if (x.size() < 2)
    throw Error(ErrorKind::InvalidParameter, "mod_full needs n >= 2");
  RunContext ctx(opts);
  CompositeState st = run_circuit(x, {"mod", StepKind::Query, 0,
                                      static_cast<long long>(x.size())},
                                  ctx);
  const double leak = ctx.leak();
  return {std::move(st), ctx.take_ledger(), leak};
}

double expected_global_phase(const BitString& x) {
  long long e = 0;
  for (std::size_t l = 0; l < x.size(); ++l)
    if (x[l]) e += static_cast<long long>(l);
  return std::arg(root_of_unity(x.size(), -e));
}

AlgorithmResult mod_full(const BitString& x, const SimulationOptions& opts) {
  require_input_size(x);
  if (x.size() < 2)
    throw Error(ErrorKind::InvalidParameter, "mod_full needs n >= 2");
  RunContext ctx(opts);
  const std::size_t r = mod_residue(x, 0, ctx);
  return ctx.finish(static_cast<Label>(r));
}

AlgorithmResult mod_general(const BitString& x, std::size_t m,
                            const SimulationOptions& opts) {
  require_input_size(x);
  const std::size_t n = x.size();
  if (m < 1 || m > n)
    throw Error(ErrorKind::InvalidParameter,
                "mod_general needs 1 <= m <= n (m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ")");
  RunContext ctx(opts);
  if (m == 1) return ctx.finish(0);
  const std::size_t blocks = n / m;
  std::size_t sum = 0;
  for (std::size_t i = 0; i < blocks; ++i)
    sum += mod_residue(x.substr(i * m, m), i * m, ctx);
  for (std::size_t i = blocks * m; i < n; ++i) sum += classical_bit(x, i, ctx);
  return ctx.finish(static_cast<Label>(sum % m));
}

AlgorithmResult parity_pair(const BitString& x, std::size_t i, std::size_t j,
                            const SimulationOptions& opts) {
  require_input_size(x);
  if (i >= x.size() || j >= x.size())
    throw Error(ErrorKind::OutOfRange, "parity_pair: index out of range");
  if (i == j)
    throw Error(ErrorKind::InvalidParameter, "parity_pair: indices must differ");
  RunContext ctx(opts);
  const unsigned p = parity_bits(x, i, j, 0, ctx);
  return ctx.finish(static_cast<Label>(p));
}

AlgorithmResult nonevasive_eval(const SymmetricFunction& f, std::size_t k,
                                const BitString& x,
                                const SimulationOptions& opts) {
  require_input_size(x);
  if (x.size() != f.n)
    throw Error(ErrorKind::DimensionMismatch,
                "input length differs from function arity");
  if (!validate_nonevasive_promise(f, k))
    throw Error(ErrorKind::PromiseViolated,
                "F(0) = F(k) and F(n-k) = F(n) does not hold for k=" +
                    std::to_string(k));
  const std::size_t n = f.n;
  RunContext ctx(opts);
  if (k == n) {
    // F(0) = F(n), so |x| mod n determines F(|x|).
    const std::size_t a = mod_residue(x, 0, ctx);
    return ctx.finish(f.at_weight(a));
  }
  const std::size_t head = n - k;
  const std::size_t a = mod_residue(x.substr(0, head), 0, ctx);
  const std::size_t b = mod_residue(x.substr(head, k), head, ctx);
  Label out;
  if (a != 0 && b != 0) {
    out = f.at_weight(a + b);
  } else if (a != 0) {
    // |x''| in {0, k}.
    out = classical_bit(x, head, ctx) ? f.at_weight(a + k) : f.at_weight(a);
  } else if (b != 0) {
    // |x'| in {0, n-k}.
    out = classical_bit(x, 0, ctx) ? f.at_weight(head + b) : f.at_weight(b);
  } else {
    // |x| in {0, k} or {n-k, n}; each pair shares its label.
    out = classical_bit(x, 0, ctx) ? f.at_weight(head) : f.at_weight(0);
  }
  return ctx.finish(out);
}

AlgorithmResult exact_zero_l(const BitString& x, std::size_t l,
                             const SimulationOptions& opts) {
  require_input_size(x);
  const std::size_t n = x.size();
  if (l < 2 || l > n)
    throw Error(ErrorKind::OutOfRange, "exact_zero_l needs 2 <= l <= n (l=" +
                                           std::to_string(l) + ", n=" +
                                           std::to_string(n) + ")");
  RunContext ctx(opts);
  if (l == n) {
    const std::size_t r = mod_residue(x, 0, ctx);
    return ctx.finish(r == 0 ? 1 : 0);
  }
  for (std::size_t i = 0; i + l < n; ++i) {
    if (classical_bit(x, i, ctx)) {
      ctx.note("early exit at i=" + std::to_string(i));
      // |x| = l iff the suffix after i has weight l - 1.
      const bool hit = exact_k_in_context(x.substr(i + 1, n - i - 1), l - 1, ctx);
      return ctx.finish(hit ? 1 : 0);
    }
  }
  const std::size_t r = mod_residue(x.substr(n - l, l), n - l, ctx);
  return ctx.finish(r == 0 ? 1 : 0);
}

std::pair<AlgorithmResult, Exact1Result> exact_one_top(
    const BitString& x, const SimulationOptions& opts) {
  require_input_size(x);
  if (x.size() < 4)
    throw Error(ErrorKind::InvalidParameter, "exact_one_top needs n >= 4");
  RunContext ctx(opts);
  Exact1Result r = exact_one_recursive(x, 0, ctx);
  std::sort(r.majority_indices.begin(), r.majority_indices.end());
  AlgorithmResult res = ctx.finish(r.in_promise ? 1 : 0);
  return {std::move(res), std::move(r)};
}

bool subroutine_exact_k(const BitString& x_sub, std::size_t k,
                        QueryLedger& ledger) {
  const std::size_t len = x_sub.size();
  if (k > len)
    throw Error(ErrorKind::OutOfRange, "subroutine_exact_k needs k <= length");
  const std::size_t cost = std::max(k, len - k);
  if (cost > 0)
    ledger.charge(ChargeKind::CostModeled, cost, "exact-k",
                  {static_cast<long long>(len), static_cast<long long>(k)});
  return x_sub.weight() == k;
}

std::pair<bool, std::optional<std::pair<std::size_t, std::size_t>>>
subroutine_exact_14_5(const BitString& x_sub, QueryLedger& ledger) {
  if (x_sub.size() != 5)
    throw Error(ErrorKind::InvalidDimension,
                "subroutine_exact_14_5 needs exactly 5 bits");
  ledger.charge(ChargeKind::CostModeled, 3, "exact-1-4-of-5");
  const std::size_t w = x_sub.weight();
  if (w != 1 && w != 4) return {false, std::nullopt};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (x_sub[i] != x_sub[j]) return {true, std::make_pair(i, j)};
  return {false, std::nullopt};  // unreachable for w in {1, 4}
}

}  // namespace exq
