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

// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has checked the CPU flags.
//
// Layout: one __m256d holds two interleaved complex doubles
// [re0, im0, re1, im1].

#include "exq/kernels.hpp"

#if defined(EXQ_HAVE_AVX2)

#include <immintrin.h>

namespace exq::kernels {
namespace {

inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// (a * b) for two complex pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of the two complex lanes of v.
inline cplx csum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

void mul_inplace_avx2(cplx* y, const cplx* f, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(y + i, cmul(load2(y + i), load2(f + i)));
  for (; i < n; ++i) {
    const cplx a = y[i];
    const cplx b = f[i];
    y[i] = {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
  }
}

void matvec_avx2(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                 std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const cplx* row = a + r * cols;
    __m256d acc_re = _mm256_setzero_pd();  // [ar*xr, ai*xr, ...]
    __m256d acc_im = _mm256_setzero_pd();  // [ai*xi, ar*xi, ...]
    std::size_t c = 0;
    for (; c + 2 <= cols; c += 2) {
      const __m256d av = load2(row + c);
      const __m256d xv = load2(x + c);
      acc_re = _mm256_fmadd_pd(av, _mm256_movedup_pd(xv), acc_re);
      acc_im = _mm256_fmadd_pd(_mm256_permute_pd(av, 0x5),
                               _mm256_permute_pd(xv, 0xF), acc_im);
    }
    cplx s = csum(_mm256_addsub_pd(acc_re, acc_im));
    double re = s.real();
    double im = s.imag();
    for (; c < cols; ++c) {
      re += row[c].real() * x[c].real() - row[c].imag() * x[c].imag();
      im += row[c].real() * x[c].imag() + row[c].imag() * x[c].real();
    }
    y[r] = {re, im};
  }
}

cplx inner_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();  // [ar*br, ai*bi, ...]
  __m256d acc_im = _mm256_setzero_pd();  // [ai*br, ar*bi, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = load2(a + i);
    const __m256d bv = load2(b + i);
    acc_re = _mm256_fmadd_pd(av, bv, acc_re);
    acc_im = _mm256_fmadd_pd(_mm256_permute_pd(av, 0x5), bv, acc_im);
  }
  alignas(32) double r[4];
  alignas(32) double m[4];
  _mm256_store_pd(r, acc_re);
  _mm256_store_pd(m, acc_im);
  double re = (r[0] + r[1]) + (r[2] + r[3]);
  double im = (m[1] - m[0]) + (m[3] - m[2]);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void abs_sq_avx2(const cplx* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = load2(in + i);
    const __m256d v1 = load2(in + i + 2);
    // hadd interleaves as [c0, c2, c1, c3].
    const __m256d h =
        _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
  }
  for (; i < n; ++i)
    out[i] = in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
}

double norm_sq_avx2(const cplx* in, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(in + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
  return s;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable t{Isa::Avx2,  mul_inplace_avx2, matvec_avx2,
                             inner_avx2, abs_sq_avx2,      norm_sq_avx2};
  return &t;
}

}  // namespace exq::kernels

#else

namespace exq::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace exq::kernels

#endif
