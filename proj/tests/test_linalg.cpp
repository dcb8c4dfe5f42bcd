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

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "exq/linalg.hpp"
#include "test_util.hpp"

using namespace exq;
using exq::testing::thrown_kind;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("fourier_matrix small cases") {
  const auto f1 = fourier_matrix(1);
  CHECK(f1.dim() == 1);
  CHECK(std::abs(f1.at(0, 0) - Complex(1, 0)) <= kEntryTol);

  const auto f2 = fourier_matrix(2);
  const double h = 1 / std::sqrt(2.0);
  CHECK(std::abs(f2.at(0, 0) - h) <= kEntryTol);
  CHECK(std::abs(f2.at(0, 1) - h) <= kEntryTol);
  CHECK(std::abs(f2.at(1, 0) - h) <= kEntryTol);
  CHECK(std::abs(f2.at(1, 1) + h) <= kEntryTol);

  CHECK(std::abs(fourier_matrix(4).at(2, 3) - Complex(-0.5, 0)) <= kEntryTol);

  EXQ_CHECK_THROWS_KIND(fourier_matrix(0), ErrorKind::InvalidDimension);
  EXQ_CHECK_THROWS_KIND(fourier_matrix(kMaxRegisterDim + 1), ErrorKind::InvalidDimension);
}

TEST_CASE("fourier_matrix is unitary and matches the defining formula") {
  for (std::size_t n = 1; n <= 16; ++n) {
    CAPTURE(n);
    const auto f = fourier_matrix(n);
    CHECK(f.unitarity_deviation() <= kNormTol);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double ang = 2 * kPi * static_cast<double>(j * k) / static_cast<double>(n);
        CHECK(std::abs(f.at(j, k) - std::polar(1 / std::sqrt(double(n)), ang)) <= 1e-12);
      }
  }
  CHECK(fourier_matrix(64).unitarity_deviation() <= kNormTol);
}

TEST_CASE("roots of unity use the reduced exponent") {
  CHECK(root_of_unity(4, 1) == Complex(0, 1));
  CHECK(root_of_unity(4, 2) == Complex(-1, 0));
  CHECK(root_of_unity(4, -1) == Complex(0, -1));
  CHECK(root_of_unity(7, 7 * 1000003 + 3) == root_of_unity(7, 3));
  const auto t = roots_of_unity(12);
  REQUIRE(t.size() == 12);
  CHECK(t[3] == Complex(0, 1));
  CHECK(t[6] == Complex(-1, 0));
}

TEST_CASE("phi_state") {
  const auto p30 = phi_state(3, 0);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(p30[j] - 1 / std::sqrt(3.0)) <= kEntryTol);
  const auto p21 = phi_state(2, 1);
  CHECK(std::abs(p21[0] - 1 / std::sqrt(2.0)) <= kEntryTol);
  CHECK(std::abs(p21[1] + 1 / std::sqrt(2.0)) <= kEntryTol);
  EXQ_CHECK_THROWS_KIND(phi_state(3, 3), ErrorKind::OutOfRange);

  for (std::size_t n = 1; n <= 16; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      const auto a = phi_state(n, k);
      CHECK(std::abs(a.norm_sq() - 1) <= kEntryTol);
      for (std::size_t l = 0; l < n; ++l)
        if (l != k) CHECK(std::abs(inner_product(a, phi_state(n, l))) <= kEntryTol);
    }
}

TEST_CASE("apply_operator") {
  const auto s = testing::random_state(5, 3);
  CHECK(apply_operator(UnitaryMatrix::identity(5), s).max_abs_diff(s) == 0.0);

  const auto h = apply_operator(fourier_matrix(2), StateVector::basis(2, 0));
  CHECK(std::abs(h[0] - 1 / std::sqrt(2.0)) <= kEntryTol);
  CHECK(std::abs(h[1] - 1 / std::sqrt(2.0)) <= kEntryTol);

  const auto f3 = fourier_matrix(3);
  const auto p = phi_state(3, 2);
  CHECK(apply_operator(f3.adjoint(), apply_operator(f3, p)).max_abs_diff(p) <= kEntryTol);

  EXQ_CHECK_THROWS_KIND(apply_operator(f3, s), ErrorKind::DimensionMismatch);
}

TEST_CASE("apply_operator preserves the norm of composed unitaries") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::mt19937_64 gen(n);
    std::shuffle(image.begin(), image.end(), gen);
    const auto perm = PermutationBuilder::build(image);
    CHECK(perm.is_permutation());
    const auto u = fourier_matrix(n) * perm * fourier_matrix(n).adjoint() * fourier_matrix(n);
    CHECK(u.unitarity_deviation() <= kNormTol);
    const auto s = testing::random_state(n, 100 + n);
    CHECK(std::abs(apply_operator(u, s).norm_sq() - 1) <= kNormTol);
  }
}

TEST_CASE("global_phase_fidelity") {
  const auto b = testing::random_state(6, 9);
  CHECK(global_phase_fidelity(b, b) == doctest::Approx(1.0).epsilon(1e-15));
  const auto a = b.scaled(std::polar(1.0, kPi / 7));
  CHECK(std::abs(global_phase_fidelity(a, b) - 1) <= kEntryTol);
  CHECK(global_phase_fidelity(phi_state(4, 0), phi_state(4, 1)) <= kEntryTol);
  EXQ_CHECK_THROWS_KIND(global_phase_fidelity(b, phi_state(3, 0)), ErrorKind::DimensionMismatch);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = testing::random_state(7, seed);
    const auto y = testing::random_state(7, seed + 1000);
    const double f = global_phase_fidelity(x, y);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(std::abs(f - global_phase_fidelity(y, x)) <= kEntryTol);
    const Complex w = std::polar(1.0, 0.37 * static_cast<double>(seed));
    CHECK(std::abs(f - global_phase_fidelity(x.scaled(w), y)) <= kEntryTol);
    CHECK(std::abs(f - global_phase_fidelity(x, y.scaled(std::conj(w)))) <= kEntryTol);
  }
}

TEST_CASE("relative_phase and angular_distance") {
  const auto ref = phi_state(5, 2);
  CHECK(std::abs(relative_phase(ref, ref.scaled(std::polar(1.0, 1.1))) - 1.1) <= 1e-12);
  CHECK(std::abs(relative_phase(ref, ref.scaled(-1.0)) - kPi) <= 1e-12);
  CHECK(std::abs(relative_phase(ref, ref.scaled(Complex(-1.0, -0.0))) - kPi) <= 1e-12);
  CHECK(angular_distance(0.1, 0.1 + 2 * kPi) <= 1e-12);
  CHECK(std::abs(angular_distance(-3.0, 3.0) - (2 * kPi - 6.0)) <= 1e-12);
}

TEST_CASE("StateVector and UnitaryMatrix construction checks") {
  EXQ_CHECK_THROWS_KIND(StateVector(std::vector<Complex>{}), ErrorKind::InvalidDimension);
  CHECK(StateVector::uniform(4).is_normalized());
  CHECK(StateVector::uniform(4).max_abs_diff(phi_state(4, 0)) <= kEntryTol);
  CHECK_FALSE(StateVector::zero(3).is_normalized());
  CHECK(StateVector::basis(3, 2)[2] == Complex(1, 0));
  EXQ_CHECK_THROWS_KIND(StateVector::basis(3, 3), ErrorKind::OutOfRange);

  EXQ_CHECK_THROWS_KIND(UnitaryMatrix::from_entries(2, {1, 1, 0, 1}), ErrorKind::NotUnitary);
  EXQ_CHECK_THROWS_KIND(UnitaryMatrix::from_entries(2, {1, 0, 0}), ErrorKind::DimensionMismatch);
  const auto u = UnitaryMatrix::from_entries(2, {0, 1, 1, 0});
  CHECK(u.is_permutation());
  CHECK_FALSE(fourier_matrix(2).is_permutation());

  const std::size_t bad[] = {0, 0, 1};
  EXQ_CHECK_THROWS_KIND(PermutationBuilder::build(bad), ErrorKind::InvalidParameter);
}

TEST_CASE("kron and fourier_coefficients") {
  const auto k = kron(UnitaryMatrix::identity(2), fourier_matrix(2));
  CHECK(k.dim() == 4);
  CHECK(std::abs(k.at(3, 3) + 1 / std::sqrt(2.0)) <= kEntryTol);
  CHECK(std::abs(k.at(2, 3) - 1 / std::sqrt(2.0)) <= kEntryTol);
  CHECK(k.at(0, 2) == Complex(0, 0));
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto s = testing::random_state(n, n);
    const auto c = fourier_coefficients(s);
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(c[j] - inner_product(phi_state(n, j), s)) <= 1e-12);
  }
}
