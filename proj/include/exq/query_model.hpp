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

// The quantum query model over the composite register Z_n (index) x Z_n
// (phase). Basis state |j, b> has flat index j * n + b.
//
// Diagonal operators are stored as exponent tables in units of 2 pi / n and
// are never materialized densely outside the small-n cross-validation
// helpers (dense_*).

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "exq/bitstring.hpp"
#include "exq/linalg.hpp"

namespace exq {

// Operators -----------------------------------------------------------------

class DiagonalOperator {
 public:
  /// Entry i is e^{2 pi i exponents[i] / modulus}. Exponents are reduced.
  DiagonalOperator(std::size_t modulus, std::vector<std::uint32_t> exponents);

  std::size_t dim() const noexcept { return exponents_.size(); }
  std::size_t modulus() const noexcept { return modulus_; }
  std::uint32_t exponent(std::size_t i) const { return exponents_[i]; }
  /// Phase angle of entry i in [0, 2 pi).
  double angle(std::size_t i) const;
  std::vector<double> angles() const;
  Complex entry(std::size_t i) const;

  void apply(StateVector& s) const;
  /// Dense form; only for cross-validation at small n.
  UnitaryMatrix dense() const;

  friend bool operator==(const DiagonalOperator&,
                         const DiagonalOperator&) = default;

 private:
  std::size_t modulus_;
  std::vector<std::uint32_t> exponents_;
};

/// O_x |i, b> = |i, b + x_i mod n>, as a dense permutation matrix of
/// dimension n^2.
UnitaryMatrix standard_oracle(const BitString& x);

/// Phase oracle: entry (j, b) is e^{i b theta x_j}, theta = 2 pi / n.
DiagonalOperator phase_oracle(const BitString& x);

/// U_a |i> = |i + a mod n>.
UnitaryMatrix shift_operator(std::size_t n, std::size_t a);

/// Shifted phase oracle: entry (j, b) is e^{i b theta x_{(j - a) mod n}}.
DiagonalOperator shifted_phase_oracle(const BitString& x, std::size_t a);

/// (I (x) F_n) O_x (I (x) F_n^dagger), built densely from the standard oracle.
UnitaryMatrix dense_phase_oracle(const BitString& x);

/// (U_a (x) I) * dense_phase_oracle(x) * (U_{-a} (x) I).
UnitaryMatrix dense_shifted_phase_oracle(const BitString& x, std::size_t a);

/// (U_a (x) F_n) O_x (U_{-a} (x) F_n^dagger): one use of the standard oracle
/// wrapped in query-independent unitaries.
UnitaryMatrix dense_query_operator(const BitString& x, std::size_t a);

// Ledger --------------------------------------------------------------------

enum class ChargeKind { Simulated, CostModeled };

enum class StepKind {
  /// A simulated shifted-phase-oracle application in the MOD_n circuit.
  Query,
  /// A simulated single-bit query.
  ClassicalBit,
  /// A charged subroutine executed classically.
  CostModeled,
  Measurement,
  Note,
};

const char* to_string(StepKind kind);

struct TraceEntry {
  StepKind kind;
  std::size_t count;
  std::string label;
  std::array<long long, 3> params{};
  std::uint8_t n_params = 0;

  std::string render() const;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

class QueryLedger {
 public:
  /// Adds `count` (>= 1) to the counter for `kind` and appends a trace entry.
  /// `step` defaults to Query for simulated charges and CostModeled otherwise.
  void charge(ChargeKind kind, std::size_t count, std::string label,
              std::initializer_list<long long> params = {},
              std::optional<StepKind> step = std::nullopt);
  /// Appends a non-charging entry (measurement, note).
  void record(StepKind kind, std::string label,
              std::initializer_list<long long> params = {});

  std::size_t simulated() const noexcept { return simulated_; }
  std::size_t cost_modeled() const noexcept { return cost_modeled_; }
  std::size_t total() const noexcept { return simulated_ + cost_modeled_; }
  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

  /// Counters agree with the trace: simulated equals the summed counts of
  /// Query/ClassicalBit entries and cost_modeled equals the summed counts of
  /// CostModeled entries.
  bool consistent() const;

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

 private:
  std::size_t simulated_ = 0;
  std::size_t cost_modeled_ = 0;
  std::vector<TraceEntry> trace_;
};

/// Value-returning form of QueryLedger::charge.
QueryLedger ledger_charge(QueryLedger ledger, ChargeKind kind, std::size_t count,
                          std::string note);

// Composite register --------------------------------------------------------

/// State over Z_n (index) x Z_n (phase). In factorized form the phase
/// register is the basis state |classical_b> and only the index register is
/// stored; in full form all n^2 amplitudes are stored (n <= 8).
class CompositeState {
 public:
  static constexpr std::size_t kMaxFullN = 8;

  static CompositeState factorized(StateVector index_state, std::size_t b);
  static CompositeState full(std::size_t n, StateVector state);

  std::size_t n() const noexcept { return n_; }
  bool is_factorized() const noexcept { return factorized_; }
  /// Phase-register value; only meaningful when factorized.
  std::size_t classical_b() const noexcept { return b_; }
  /// Factorized: the index register. Full: the storage of all n^2 amplitudes.
  const StateVector& storage() const noexcept { return state_; }

  /// index (x) |b> in full form.
  StateVector to_full() const;
  /// Amplitudes a_j of |j, b>, j in [0, n).
  StateVector index_slice(std::size_t b) const;

  struct PhaseProfile {
    std::size_t dominant_b;
    /// Probability mass outside phase-register value dominant_b.
    double leak;
  };
  PhaseProfile phase_profile() const;

  /// I (x) U_a on the phase register.
  void shift_phase_register(std::size_t a);
  /// Shifted phase oracle O_{x,a}. Factorized form touches only the
  /// current phase-register slice.
  void apply_shifted_phase_oracle(const BitString& x, std::size_t a);
  /// Full form only.
  void apply_dense(const UnitaryMatrix& u);

 private:
  CompositeState(std::size_t n, bool factorized, std::size_t b, StateVector s)
      : n_(n), factorized_(factorized), b_(b), state_(std::move(s)) {}

  std::size_t n_;
  bool factorized_;
  std::size_t b_;
  StateVector state_;
};

// Measurement ---------------------------------------------------------------

struct MeasurementOutcome {
  std::size_t outcome;
  std::vector<double> distribution;

  /// 1 - p(outcome).
  double off_peak_mass() const;
};

/// Measures the index register in the Fourier basis {|phi_j><phi_j|}.
/// Throws NotNormalized when |s| deviates from 1 by more than kNormTol.
MeasurementOutcome povm_measure(const StateVector& s, std::uint64_t seed);

/// Same, for a distribution already computed by the caller.
std::size_t sample_outcome(const std::vector<double>& distribution,
                           std::uint64_t seed);

/// p(j) = |<phi_j|s>|^2 without sampling.
std::vector<double> fourier_distribution(const StateVector& s);

/// max |sum_j |phi_j><phi_j| - I| entrywise, computed densely.
double povm_completeness_deviation(std::size_t n);

}  // namespace exq
