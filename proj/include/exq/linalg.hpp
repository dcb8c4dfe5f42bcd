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

// Dense complex linear algebra for small registers: state vectors, unitary
// matrices, the discrete Fourier operator and its basis states.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace exq {

using Complex = std::complex<double>;

/// Norm and unitarity checks.
inline constexpr double kNormTol = 1e-10;
/// Entrywise and orthogonality checks.
inline constexpr double kEntryTol = 1e-12;
/// Largest single-register dimension (Fourier matrix, index register).
inline constexpr std::size_t kMaxRegisterDim = 64;
/// Largest dense matrix dimension (a composite register of two n <= 64).
inline constexpr std::size_t kMaxDenseDim = kMaxRegisterDim * kMaxRegisterDim;

/// Cached table of e^{2 pi i e / n} for e in [0, n). Exponents are always
/// reduced modulo n before lookup, so accuracy does not degrade with the
/// size of the unreduced exponent.
std::span<const Complex> roots_of_unity(std::size_t n);

/// e^{2 pi i (e mod n) / n}
Complex root_of_unity(std::size_t n, long long e);

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector zero(std::size_t dim);
  static StateVector basis(std::size_t dim, std::size_t index);
  /// (1/sqrt(dim)) sum_j |j>
  static StateVector uniform(std::size_t dim);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm_sq() const;
  bool is_normalized(double tol = kNormTol) const;
  bool all_finite() const;

  StateVector scaled(Complex factor) const;
  double max_abs_diff(const StateVector& other) const;

 private:
  std::vector<Complex> amps_;
};

/// Dense row-major square matrix that is unitary by construction or was
/// checked on entry through from_entries().
class UnitaryMatrix {
 public:
  static UnitaryMatrix identity(std::size_t dim);
  /// Throws NotUnitary when U^dagger U deviates from I by more than tol.
  static UnitaryMatrix from_entries(std::size_t dim, std::vector<Complex> entries,
                                    double tol = kNormTol);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  UnitaryMatrix adjoint() const;
  /// Matrix product this * rhs.
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;
  /// Max entrywise |U^dagger U - I|.
  double unitarity_deviation() const;
  double max_abs_diff(const UnitaryMatrix& other) const;
  bool is_permutation() const;

 private:
  UnitaryMatrix(std::size_t dim, std::vector<Complex> entries);
  friend UnitaryMatrix kron(const UnitaryMatrix&, const UnitaryMatrix&);
  friend UnitaryMatrix fourier_matrix(std::size_t n);
  friend class PermutationBuilder;

  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker product a (x) b; the left factor indexes the slow axis.
UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// F_n with entry (j,k) = e^{2 pi i jk/n} / sqrt(n).
UnitaryMatrix fourier_matrix(std::size_t n);

/// |phi_k> = F_n |k>, amplitude j = e^{2 pi i jk/n} / sqrt(n).
StateVector phi_state(std::size_t n, std::size_t k);

StateVector apply_operator(const UnitaryMatrix& u, const StateVector& s);

/// Coefficients <phi_k|s> for k in [0, n); i.e. F_n^dagger s. Uses a cached
/// adjoint Fourier matrix, so repeated calls do no trigonometry.
StateVector fourier_coefficients(const StateVector& s);

/// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|, clamped to [0, 1].
double global_phase_fidelity(const StateVector& a, const StateVector& b);

/// arg <ref|s> in (-pi, pi]. Meaningful when s is ref times a phase.
double relative_phase(const StateVector& ref, const StateVector& s);

/// Distance between two angles on the circle, in [0, pi].
double angular_distance(double a, double b);

/// Builds permutation matrices; the result is unitary by construction.
class PermutationBuilder {
 public:
  /// `image[i]` is the basis index |i> is mapped to. Throws unless image is
  /// a bijection on [0, image.size()).
  static UnitaryMatrix build(std::span<const std::size_t> image);
};

}  // namespace exq
