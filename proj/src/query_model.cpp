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

#include "exq/query_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "exq/error.hpp"
#include "exq/kernels.hpp"

namespace exq {
namespace {

std::size_t register_dim(const BitString& x) {
  const std::size_t n = x.size();
  if (n == 0 || n > kMaxRegisterDim)
    throw Error(ErrorKind::InvalidDimension,
                "oracle input length must be in [1, 64], got " +
                    std::to_string(n));
  return n;
}

void require_residue(std::size_t a, std::size_t n, const char* what) {
  if (a >= n)
    throw Error(ErrorKind::OutOfRange, std::string(what) + ": residue " +
                                           std::to_string(a) +
                                           " out of range for n=" +
                                           std::to_string(n));
}

}  // namespace

// DiagonalOperator ----------------------------------------------------------

DiagonalOperator::DiagonalOperator(std::size_t modulus,
                                   std::vector<std::uint32_t> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ == 0 || modulus_ > kMaxRegisterDim)
    throw Error(ErrorKind::InvalidDimension, "diagonal: bad modulus");
  for (auto& e : exponents_) e %= static_cast<std::uint32_t>(modulus_);
}

double DiagonalOperator::angle(std::size_t i) const {
  return 2.0 * std::numbers::pi * static_cast<double>(exponents_.at(i)) /
         static_cast<double>(modulus_);
}

std::vector<double> DiagonalOperator::angles() const {
  std::vector<double> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = angle(i);
  return out;
}

Complex DiagonalOperator::entry(std::size_t i) const {
  return roots_of_unity(modulus_)[exponents_.at(i)];
}

void DiagonalOperator::apply(StateVector& s) const {
  if (s.dim() != dim())
    throw Error(ErrorKind::DimensionMismatch, "diagonal apply: dimension mismatch");
  const auto roots = roots_of_unity(modulus_);
  std::vector<Complex> factors(dim());
  for (std::size_t i = 0; i < dim(); ++i) factors[i] = roots[exponents_[i]];
  kernels::mul_inplace(s.amplitudes(), factors);
}

UnitaryMatrix DiagonalOperator::dense() const {
  const std::size_t d = dim();
  std::vector<Complex> e(d * d);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = entry(i);
  return UnitaryMatrix::from_entries(d, std::move(e));
}

// Oracles -------------------------------------------------------------------

UnitaryMatrix standard_oracle(const BitString& x) {
  const std::size_t n = register_dim(x);
  std::vector<std::size_t> image(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b)
      image[i * n + b] = i * n + (b + x[i]) % n;
  return PermutationBuilder::build(image);
}

DiagonalOperator phase_oracle(const BitString& x) {
  return shifted_phase_oracle(x, 0);
}

UnitaryMatrix shift_operator(std::size_t n, std::size_t a) {
  if (n == 0 || n > kMaxRegisterDim)
    throw Error(ErrorKind::InvalidDimension, "shift_operator: bad dimension");
  require_residue(a, n, "shift_operator");
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = (i + a) % n;
  return PermutationBuilder::build(image);
}

DiagonalOperator shifted_phase_oracle(const BitString& x, std::size_t a) {
  const std::size_t n = register_dim(x);
  require_residue(a, n, "shifted_phase_oracle");
  std::vector<std::uint32_t> exps(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned bit = x[(j + n - a) % n];
    for (std::size_t b = 0; b < n; ++b)
      exps[j * n + b] = static_cast<std::uint32_t>((b * bit) % n);
  }
  return DiagonalOperator(n, std::move(exps));
}

UnitaryMatrix dense_phase_oracle(const BitString& x) {
  const std::size_t n = register_dim(x);
  const auto id = UnitaryMatrix::identity(n);
  const auto f = fourier_matrix(n);
  return kron(id, f) * standard_oracle(x) * kron(id, f.adjoint());
}

UnitaryMatrix dense_shifted_phase_oracle(const BitString& x, std::size_t a) {
  const std::size_t n = register_dim(x);
  require_residue(a, n, "dense_shifted_phase_oracle");
  const auto id = UnitaryMatrix::identity(n);
  return kron(shift_operator(n, a), id) * dense_phase_oracle(x) *
         kron(shift_operator(n, (n - a) % n), id);
}

UnitaryMatrix dense_query_operator(const BitString& x, std::size_t a) {
  const std::size_t n = register_dim(x);
  require_residue(a, n, "dense_query_operator");
  const auto f = fourier_matrix(n);
  return kron(shift_operator(n, a), f) * standard_oracle(x) *
         kron(shift_operator(n, (n - a) % n), f.adjoint());
}

// Ledger --------------------------------------------------------------------

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Query:
      return "query";
    case StepKind::ClassicalBit:
      return "classical-bit";
    case StepKind::CostModeled:
      return "cost-modeled";
    case StepKind::Measurement:
      return "measure";
    case StepKind::Note:
      return "note";
  }
  return "unknown";
}

std::string TraceEntry::render() const {
  std::ostringstream os;
  os << to_string(kind) << ' ' << label;
  if (n_params > 0) {
    os << '(';
    for (std::uint8_t i = 0; i < n_params; ++i) {
      if (i) os << ',';
      os << params[i];
    }
    os << ')';
  }
  if (kind == StepKind::Query || kind == StepKind::ClassicalBit ||
      kind == StepKind::CostModeled)
    os << " x" << count;
  return os.str();
}

namespace {

TraceEntry make_entry(StepKind kind, std::size_t count, std::string label,
                      std::initializer_list<long long> params) {
  if (params.size() > 3)
    throw Error(ErrorKind::InvalidParameter, "trace entries carry at most 3 params");
  TraceEntry e{kind, count, std::move(label), {}, 0};
  for (long long p : params) e.params[e.n_params++] = p;
  return e;
}

}  // namespace

void QueryLedger::charge(ChargeKind kind, std::size_t count, std::string label,
                         std::initializer_list<long long> params,
                         std::optional<StepKind> step) {
  if (count == 0)
    throw Error(ErrorKind::InvalidParameter, "ledger charge count must be >= 1");
  StepKind s = step.value_or(kind == ChargeKind::Simulated ? StepKind::Query
                                                           : StepKind::CostModeled);
  const bool ok = kind == ChargeKind::Simulated
                      ? (s == StepKind::Query || s == StepKind::ClassicalBit)
                      : s == StepKind::CostModeled;
  if (!ok)
    throw Error(ErrorKind::InvalidParameter, "charge kind and step kind disagree");
  if (kind == ChargeKind::Simulated)
    simulated_ += count;
  else
    cost_modeled_ += count;
  trace_.push_back(make_entry(s, count, std::move(label), params));
}

void QueryLedger::record(StepKind kind, std::string label,
                         std::initializer_list<long long> params) {
  if (kind != StepKind::Measurement && kind != StepKind::Note)
    throw Error(ErrorKind::InvalidParameter,
                "record() is for non-charging entries; use charge()");
  trace_.push_back(make_entry(kind, 0, std::move(label), params));
}

bool QueryLedger::consistent() const {
  std::size_t sim = 0;
  std::size_t cost = 0;
  for (const auto& e : trace_) {
    switch (e.kind) {
      case StepKind::Query:
      case StepKind::ClassicalBit:
        sim += e.count;
        break;
      case StepKind::CostModeled:
        cost += e.count;
        break;
      default:
        if (e.count != 0) return false;
    }
  }
  return sim == simulated_ && cost == cost_modeled_;
}

QueryLedger ledger_charge(QueryLedger ledger, ChargeKind kind, std::size_t count,
                          std::string note) {
  ledger.charge(kind, count, std::move(note));
  return ledger;
}

// CompositeState ------------------------------------------------------------

CompositeState CompositeState::factorized(StateVector index_state, std::size_t b) {
  const std::size_t n = index_state.dim();
  if (n == 0 || n > kMaxRegisterDim)
    throw Error(ErrorKind::InvalidDimension, "composite: bad register dimension");
  require_residue(b, n, "composite phase register");
  return CompositeState(n, true, b, std::move(index_state));
}

CompositeState CompositeState::full(std::size_t n, StateVector state) {
  if (n == 0 || n > kMaxFullN)
    throw Error(ErrorKind::InvalidDimension,
                "full composite simulation supports n <= 8");
  if (state.dim() != n * n)
    throw Error(ErrorKind::DimensionMismatch, "composite: expected n^2 amplitudes");
  return CompositeState(n, false, 0, std::move(state));
}

StateVector CompositeState::to_full() const {
  if (!factorized_) return state_;
  std::vector<Complex> a(n_ * n_);
  for (std::size_t j = 0; j < n_; ++j) a[j * n_ + b_] = state_[j];
  return StateVector(std::move(a));
}

StateVector CompositeState::index_slice(std::size_t b) const {
  require_residue(b, n_, "index_slice");
  if (factorized_) return b == b_ ? state_ : StateVector::zero(n_);
  std::vector<Complex> a(n_);
  for (std::size_t j = 0; j < n_; ++j) a[j] = state_[j * n_ + b];
  return StateVector(std::move(a));
}

CompositeState::PhaseProfile CompositeState::phase_profile() const {
  if (factorized_) return {b_, 0.0};
  std::vector<double> mass(n_, 0.0);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t b = 0; b < n_; ++b) mass[b] += std::norm(state_[j * n_ + b]);
  const auto it = std::max_element(mass.begin(), mass.end());
  double total = 0.0;
  for (double m : mass) total += m;
  return {static_cast<std::size_t>(it - mass.begin()), total - *it};
}

void CompositeState::shift_phase_register(std::size_t a) {
  require_residue(a, n_, "shift_phase_register");
  if (factorized_) {
    b_ = (b_ + a) % n_;
    return;
  }
  std::vector<Complex> out(n_ * n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t b = 0; b < n_; ++b)
      out[j * n_ + (b + a) % n_] = state_[j * n_ + b];
  state_ = StateVector(std::move(out));
}

void CompositeState::apply_shifted_phase_oracle(const BitString& x, std::size_t a) {
  if (x.size() != n_)
    throw Error(ErrorKind::DimensionMismatch, "oracle length differs from register");
  require_residue(a, n_, "apply_shifted_phase_oracle");
  if (!factorized_) {
    shifted_phase_oracle(x, a).apply(state_);
    return;
  }
  // Slice b of O_{x,a}: e^{i b theta x_{j-a}} on index j.
  const Complex w = roots_of_unity(n_)[b_];
  std::vector<Complex> factors(n_);
  for (std::size_t j = 0; j < n_; ++j)
    factors[j] = x[(j + n_ - a) % n_] ? w : Complex(1.0, 0.0);
  kernels::mul_inplace(state_.amplitudes(), factors);
}

void CompositeState::apply_dense(const UnitaryMatrix& u) {
  if (factorized_)
    throw Error(ErrorKind::InvalidParameter, "apply_dense needs the full form");
  state_ = apply_operator(u, state_);
}

// Measurement ---------------------------------------------------------------

double MeasurementOutcome::off_peak_mass() const {
  double rest = 0.0;
  for (std::size_t j = 0; j < distribution.size(); ++j)
    if (j != outcome) rest += distribution[j];
  return rest;
}

std::vector<double> fourier_distribution(const StateVector& s) {
  const StateVector c = fourier_coefficients(s);
  std::vector<double> p(c.dim());
  kernels::active().abs_sq(c.amplitudes().data(), p.data(), p.size());
  return p;
}

std::size_t sample_outcome(const std::vector<double>& distribution,
                           std::uint64_t seed) {
  if (distribution.empty())
    throw Error(ErrorKind::InvalidDimension, "empty distribution");
  std::mt19937_64 gen(seed);
  // 53 random mantissa bits; avoids implementation-defined distributions.
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  double total = 0.0;
  for (double p : distribution) total += p;
  double acc = 0.0;
  for (std::size_t j = 0; j < distribution.size(); ++j) {
    acc += distribution[j];
    if (u * total < acc) return j;
  }
  return distribution.size() - 1;
}

MeasurementOutcome povm_measure(const StateVector& s, std::uint64_t seed) {
  if (!s.is_normalized(kNormTol))
    throw Error(ErrorKind::NotNormalized,
                "measurement input is not normalized (|s|^2 = " +
                    std::to_string(s.norm_sq()) + ")");
  auto p = fourier_distribution(s);
  const std::size_t outcome = sample_outcome(p, seed);
  return {outcome, std::move(p)};
}

double povm_completeness_deviation(std::size_t n) {
  std::vector<Complex> sum(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const StateVector phi = phi_state(n, k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sum[r * n + c] += phi[r] * std::conj(phi[c]);
  }
  double dev = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      dev = std::max(dev, std::abs(sum[r * n + c] - (r == c ? 1.0 : 0.0)));
  return dev;
}

}  // namespace exq
