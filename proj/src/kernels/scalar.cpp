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

// Reference kernels. Complex products are spelled out on real/imag parts so
// that the result does not depend on the libgcc NaN-recovery path of
// std::complex multiplication.

#include "exq/kernels.hpp"

namespace exq::kernels {
namespace {

inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void mul_inplace_scalar(cplx* y, const cplx* f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = mul(y[i], f[i]);
}

void matvec_scalar(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                   std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    double re = 0.0;
    double im = 0.0;
    const cplx* row = a + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      re += row[c].real() * x[c].real() - row[c].imag() * x[c].imag();
      im += row[c].real() * x[c].imag() + row[c].imag() * x[c].real();
    }
    y[r] = {re, im};
  }
}

cplx inner_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void abs_sq_scalar(const cplx* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
}

double norm_sq_scalar(const cplx* in, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
  return s;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::Scalar,  mul_inplace_scalar, matvec_scalar,
                             inner_scalar, abs_sq_scalar,      norm_sq_scalar};
  return t;
}

}  // namespace exq::kernels
