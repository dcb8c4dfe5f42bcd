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

// Exact quantum query algorithms for symmetric functions, executed on the
// state-vector simulator with full query accounting.
//
// Every entry point builds its own ledger. A sub-instance on m bits runs the
// Hamming-weight-mod-m circuit on a register of dimension m; each oracle
// application on it is charged as one query to the global input.
//
// Subroutines marked cost-modeled compute their answer classically and charge
// their published query count; any run that uses one reports
// fully_simulated = false.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exq/bitstring.hpp"
#include "exq/functions.hpp"
#include "exq/linalg.hpp"
#include "exq/query_model.hpp"

namespace exq {

enum class Backend {
  /// Index register only; the phase register is a classical value.
  Factorized,
  /// All n^2 amplitudes with the diagonal shifted phase oracle (n <= 8).
  Full,
  /// All n^2 amplitudes with each query built densely from the standard
  /// oracle O_x and Fourier conjugation (n <= 8).
  Dense,
};

/// Receives per-step states. Used by the trace tool; never required.
class StepObserver {
 public:
  virtual ~StepObserver() = default;
  /// After the oracle application with shift `a` on the sub-instance
  /// `instance`, whose first slot is global index `offset`.
  virtual void on_query(const BitString& /*instance*/, std::size_t /*offset*/,
                        std::size_t /*a*/, const CompositeState& /*state*/) {}
  virtual void on_measurement(const StateVector& /*index_state*/,
                              const StateVector& /*fourier_coefficients*/,
                              const MeasurementOutcome& /*outcome*/) {}
  virtual void on_event(const std::string& /*text*/) {}
};

struct SimulationOptions {
  Backend backend = Backend::Factorized;
  std::uint64_t seed = 0;
  StepObserver* observer = nullptr;
};

struct AlgorithmResult {
  Label output = 0;
  QueryLedger ledger;
  /// Largest probability mass outside the reported outcome over every
  /// measurement in the run.
  double exactness_evidence = 0.0;
  bool fully_simulated = true;
  /// Full/Dense backends: largest mass outside a single phase-register value
  /// observed after any step. Always 0 for the factorized backend.
  double max_phase_register_leak = 0.0;

  std::size_t total_queries() const noexcept { return ledger.total(); }
};

struct Exact1Result {
  bool in_promise = false;
  std::vector<std::size_t> majority_indices;
};

/// i is a majority index of x: |x| > n/2 and x_i = 1, or |x| < n/2 and
/// x_i = 0. False when |x| = n/2.
bool is_majority_index(const BitString& x, std::size_t i);

/// The state just before the measurement of the MOD_n^n circuit.
struct ModFullSimulation {
  CompositeState final_state;
  QueryLedger ledger;
  double max_phase_register_leak = 0.0;

  /// Index register at the dominant phase-register value.
  StateVector index_state() const;
};

/// Runs the MOD_n^n circuit up to (not including) the measurement.
ModFullSimulation simulate_mod_full(const BitString& x,
                                    const SimulationOptions& opts = {});

/// -sum_{l : x_l = 1} l * 2 pi / n, reduced to (-pi, pi].
double expected_global_phase(const BitString& x);

/// |x| mod n with n - 1 queries. Requires n >= 2.
AlgorithmResult mod_full(const BitString& x, const SimulationOptions& opts = {});

/// |x| mod m with ceil(n (1 - 1/m)) queries for 1 < m <= n; 0 with no
/// queries for m = 1.
AlgorithmResult mod_general(const BitString& x, std::size_t m,
                            const SimulationOptions& opts = {});

/// x_i XOR x_j with one query.
AlgorithmResult parity_pair(const BitString& x, std::size_t i, std::size_t j,
                            const SimulationOptions& opts = {});

/// f(x) for F satisfying F(0) = F(k), F(n-k) = F(n), with at most n - 1
/// queries. Throws PromiseViolated before any query when the promise fails.
AlgorithmResult nonevasive_eval(const SymmetricFunction& f, std::size_t k,
                                const BitString& x,
                                const SimulationOptions& opts = {});

/// [|x| in {0, l}] with at most n - 1 queries. Requires 2 <= l <= n.
AlgorithmResult exact_zero_l(const BitString& x, std::size_t l,
                             const SimulationOptions& opts = {});

/// [|x| in {1, n-1}] with at most n - 2 queries, plus majority indices when
/// the answer is 1. Requires n >= 4.
std::pair<AlgorithmResult, Exact1Result> exact_one_top(
    const BitString& x, const SimulationOptions& opts = {});

/// Cost-modeled EXACT_k: [|x_sub| = k], charging max{k, len - k}.
bool subroutine_exact_k(const BitString& x_sub, std::size_t k,
                        QueryLedger& ledger);

/// Cost-modeled 5-bit EXACT_{1,4}: charges 3. When the answer is 1, also
/// returns the lexicographically smallest pair (i, j), i < j, x_i != x_j.
std::pair<bool, std::optional<std::pair<std::size_t, std::size_t>>>
subroutine_exact_14_5(const BitString& x_sub, QueryLedger& ledger);

}  // namespace exq
