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

// Complex double-precision inner loops used by the simulator.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA implementation. The variant is chosen once at runtime from the
// CPU feature bits; setting EXQ_FORCE_SCALAR=1 in the environment pins the
// scalar path. Both variants are equivalence-tested against each other.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace exq::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// y[i] *= f[i]
  void (*mul_inplace)(cplx* y, const cplx* f, std::size_t n);
  /// y = A x with A row-major rows x cols.
  void (*matvec)(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                 std::size_t cols);
  /// sum_i conj(a[i]) * b[i]
  cplx (*inner)(const cplx* a, const cplx* b, std::size_t n);
  /// out[i] = |in[i]|^2
  void (*abs_sq)(const cplx* in, double* out, std::size_t n);
  /// sum_i |in[i]|^2
  double (*norm_sq)(const cplx* in, std::size_t n);
};

const KernelTable& scalar_table();
/// Null when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool isa_available(Isa isa);
const KernelTable& table(Isa isa);

/// The table used by the library. Selected on first use.
const KernelTable& active();
/// Overrides the runtime choice; throws if the ISA is unavailable.
void select(Isa isa);

// Span conveniences over the active table.
inline void mul_inplace(std::span<cplx> y, std::span<const cplx> f) {
  active().mul_inplace(y.data(), f.data(), y.size());
}
inline cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  return active().inner(a.data(), b.data(), a.size());
}
inline double norm_sq(std::span<const cplx> a) {
  return active().norm_sq(a.data(), a.size());
}

}  // namespace exq::kernels
