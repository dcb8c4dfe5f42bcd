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

#include "exq/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "exq/error.hpp"
#include "exq/kernels.hpp"

namespace exq {
namespace {

void require_register_dim(std::size_t n, const char* what) {
  if (n == 0 || n > kMaxRegisterDim)
    throw Error(ErrorKind::InvalidDimension,
                std::string(what) + ": dimension must be in [1, 64], got " +
                    std::to_string(n));
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": dimension mismatch " + std::to_string(a) +
                    " vs " + std::to_string(b));
}

struct RootTables {
  std::array<std::vector<Complex>, kMaxRegisterDim + 1> roots;
  std::array<std::vector<Complex>, kMaxRegisterDim + 1> fourier_adjoint;

  RootTables() {
    for (std::size_t n = 1; n <= kMaxRegisterDim; ++n) {
      auto& r = roots[n];
      r.resize(n);
      const double theta = 2.0 * std::numbers::pi / static_cast<double>(n);
      for (std::size_t e = 0; e < n; ++e) {
        const double angle = theta * static_cast<double>(e);
        r[e] = {std::cos(angle), std::sin(angle)};
      }
      // Exact values where the phase lands on an axis.
      r[0] = {1.0, 0.0};
      if (n % 2 == 0) r[n / 2] = {-1.0, 0.0};
      if (n % 4 == 0) {
        r[n / 4] = {0.0, 1.0};
        r[3 * n / 4] = {0.0, -1.0};
      }
      auto& fa = fourier_adjoint[n];
      fa.resize(n * n);
      const double scale = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          fa[j * n + k] = std::conj(r[(j * k) % n]) * scale;
    }
  }
};

const RootTables& tables() {
  static const RootTables t;
  return t;
}

}  // namespace

std::span<const Complex> roots_of_unity(std::size_t n) {
  require_register_dim(n, "roots_of_unity");
  return tables().roots[n];
}

Complex root_of_unity(std::size_t n, long long e) {
  const auto r = roots_of_unity(n);
  const long long nn = static_cast<long long>(n);
  return r[static_cast<std::size_t>(((e % nn) + nn) % nn)];
}

// StateVector ---------------------------------------------------------------

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty())
    throw Error(ErrorKind::InvalidDimension, "state vector must be non-empty");
}

StateVector StateVector::zero(std::size_t dim) {
  return StateVector(std::vector<Complex>(dim));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim)
    throw Error(ErrorKind::OutOfRange, "basis index " + std::to_string(index) +
                                           " out of range for dimension " +
                                           std::to_string(dim));
  std::vector<Complex> a(dim);
  a[index] = 1.0;
  return StateVector(std::move(a));
}

StateVector StateVector::uniform(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidDimension, "dimension 0");
  return StateVector(std::vector<Complex>(
      dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

double StateVector::norm_sq() const { return kernels::norm_sq(amps_); }

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

bool StateVector::all_finite() const {
  return std::all_of(amps_.begin(), amps_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

StateVector StateVector::scaled(Complex factor) const {
  std::vector<Complex> out(amps_);
  for (auto& c : out) c *= factor;
  return StateVector(std::move(out));
}

double StateVector::max_abs_diff(const StateVector& other) const {
  require_same_dim(dim(), other.dim(), "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    d = std::max(d, std::abs(amps_[i] - other.amps_[i]));
  return d;
}

// UnitaryMatrix -------------------------------------------------------------

UnitaryMatrix::UnitaryMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  if (dim == 0 || dim > kMaxDenseDim)
    throw Error(ErrorKind::InvalidDimension,
                "identity: bad dimension " + std::to_string(dim));
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return UnitaryMatrix(dim, std::move(e));
}

UnitaryMatrix UnitaryMatrix::from_entries(std::size_t dim,
                                          std::vector<Complex> entries,
                                          double tol) {
  if (dim == 0 || dim > kMaxDenseDim)
    throw Error(ErrorKind::InvalidDimension,
                "from_entries: bad dimension " + std::to_string(dim));
  if (entries.size() != dim * dim)
    throw Error(ErrorKind::DimensionMismatch,
                "from_entries: expected dim*dim entries");
  UnitaryMatrix u(dim, std::move(entries));
  const double dev = u.unitarity_deviation();
  if (!(dev <= tol))
    throw Error(ErrorKind::NotUnitary,
                "matrix is not unitary (deviation " + std::to_string(dev) + ")");
  return u;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
  return UnitaryMatrix(dim_, std::move(e));
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  require_same_dim(dim_, rhs.dim_, "matrix product");
  // Column-major copy of rhs lets each output entry use the matvec kernel on
  // contiguous data.
  const std::size_t d = dim_;
  std::vector<Complex> out(d * d);
  std::vector<Complex> col(d);
  std::vector<Complex> res(d);
  const auto& k = kernels::active();
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) col[r] = rhs.entries_[r * d + c];
    k.matvec(entries_.data(), col.data(), res.data(), d, d);
    for (std::size_t r = 0; r < d; ++r) out[r * d + c] = res[r];
  }
  return UnitaryMatrix(d, std::move(out));
}

double UnitaryMatrix::unitarity_deviation() const {
  const std::size_t d = dim_;
  const auto& k = kernels::active();
  // Column c of U as contiguous data; (U^dagger U)_{ab} = <col_a|col_b>.
  std::vector<Complex> cols(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) cols[c * d + r] = entries_[r * d + c];
  double dev = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      Complex g = k.inner(cols.data() + a * d, cols.data() + b * d, d);
      if (a == b) g -= 1.0;
      const double m = std::abs(g);
      if (!std::isfinite(m)) return INFINITY;
      dev = std::max(dev, m);
    }
  }
  return dev;
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix& other) const {
  require_same_dim(dim_, other.dim_, "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
  return d;
}

bool UnitaryMatrix::is_permutation() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    int ones = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex& v = entries_[r * dim_ + c];
      if (v == Complex(1.0, 0.0))
        ++ones;
      else if (v != Complex(0.0, 0.0))
        return false;
    }
    if (ones != 1) return false;
  }
  for (std::size_t c = 0; c < dim_; ++c) {
    int ones = 0;
    for (std::size_t r = 0; r < dim_; ++r)
      if (entries_[r * dim_ + c] == Complex(1.0, 0.0)) ++ones;
    if (ones != 1) return false;
  }
  return true;
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const std::size_t da = a.dim_;
  const std::size_t db = b.dim_;
  const std::size_t d = da * db;
  if (d > kMaxDenseDim)
    throw Error(ErrorKind::InvalidDimension,
                "kron: result dimension " + std::to_string(d) + " too large");
  std::vector<Complex> e(d * d);
  for (std::size_t ar = 0; ar < da; ++ar)
    for (std::size_t ac = 0; ac < da; ++ac) {
      const Complex av = a.entries_[ar * da + ac];
      if (av == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < db; ++br)
        for (std::size_t bc = 0; bc < db; ++bc)
          e[(ar * db + br) * d + (ac * db + bc)] = av * b.entries_[br * db + bc];
    }
  return UnitaryMatrix(d, std::move(e));
}

UnitaryMatrix PermutationBuilder::build(std::span<const std::size_t> image) {
  const std::size_t d = image.size();
  if (d == 0 || d > kMaxDenseDim)
    throw Error(ErrorKind::InvalidDimension, "permutation: bad dimension");
  std::vector<bool> hit(d, false);
  std::vector<Complex> e(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t t = image[i];
    if (t >= d || hit[t])
      throw Error(ErrorKind::InvalidParameter, "permutation: not a bijection");
    hit[t] = true;
    e[t * d + i] = 1.0;
  }
  return UnitaryMatrix(d, std::move(e));
}

// Fourier -------------------------------------------------------------------

UnitaryMatrix fourier_matrix(std::size_t n) {
  require_register_dim(n, "fourier_matrix");
  const auto& fa = tables().fourier_adjoint[n];
  std::vector<Complex> e(n * n);
  // F_n is symmetric, so F_n = conj(F_n^dagger).
  for (std::size_t i = 0; i < n * n; ++i) e[i] = std::conj(fa[i]);
  return UnitaryMatrix(n, std::move(e));
}

StateVector phi_state(std::size_t n, std::size_t k) {
  require_register_dim(n, "phi_state");
  if (k >= n)
    throw Error(ErrorKind::OutOfRange, "phi_state: k=" + std::to_string(k) +
                                           " out of range for n=" +
                                           std::to_string(n));
  const auto r = roots_of_unity(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = r[(j * k) % n] * scale;
  return StateVector(std::move(a));
}

StateVector apply_operator(const UnitaryMatrix& u, const StateVector& s) {
  require_same_dim(u.dim(), s.dim(), "apply_operator");
  std::vector<Complex> out(s.dim());
  kernels::active().matvec(u.entries().data(), s.amplitudes().data(),
                           out.data(), u.dim(), u.dim());
  return StateVector(std::move(out));
}

StateVector fourier_coefficients(const StateVector& s) {
  const std::size_t n = s.dim();
  require_register_dim(n, "fourier_coefficients");
  std::vector<Complex> out(n);
  kernels::active().matvec(tables().fourier_adjoint[n].data(),
                           s.amplitudes().data(), out.data(), n, n);
  return StateVector(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner_product");
  return kernels::inner(a.amplitudes(), b.amplitudes());
}

double global_phase_fidelity(const StateVector& a, const StateVector& b) {
  return std::clamp(std::abs(inner_product(a, b)), 0.0, 1.0);
}

double relative_phase(const StateVector& ref, const StateVector& s) {
  const double r = std::arg(inner_product(ref, s));
  return r <= -std::numbers::pi ? std::numbers::pi : r;
}

double angular_distance(double a, double b) {
  double d = std::fmod(a - b, 2.0 * std::numbers::pi);
  if (d < 0) d += 2.0 * std::numbers::pi;
  return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace exq
