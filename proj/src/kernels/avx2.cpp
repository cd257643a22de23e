/* Copyright 2026 The Parrondo Walk Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Compiled with -mavx2 -mfma. Only reached after a CPUID check.

#include <immintrin.h>

#include <cassert>

#include "parrondo/kernels.hpp"

namespace parrondo::kernels {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store(Complex* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

struct BroadcastComplex {
  __m256d re;
  __m256d im;
  explicit BroadcastComplex(Complex z)
      : re(_mm256_set1_pd(z.real())), im(_mm256_set1_pd(z.imag())) {}
};

// z * v for a broadcast scalar z.
inline __m256d cmul(const BroadcastComplex& z, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(v, z.re, _mm256_mul_pd(swapped, z.im));
}

// z * v + acc
inline __m256d cmul_add(const BroadcastComplex& z, __m256d v, __m256d acc) {
  return _mm256_add_pd(cmul(z, v), acc);
}

void apply_pair(std::span<Complex> a, std::span<Complex> b, const Matrix2& m) {
  assert(a.size() == b.size());
  const BroadcastComplex m00(m(0, 0)), m01(m(0, 1)), m10(m(1, 0)),
      m11(m(1, 1));
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = load(&a[i]);
    const __m256d y = load(&b[i]);
    store(&a[i], cmul_add(m01, y, cmul(m00, x)));
    store(&b[i], cmul_add(m11, y, cmul(m10, x)));
  }
  for (; i < n; ++i) {
    const Complex x = a[i];
    const Complex y = b[i];
    a[i] = m(0, 0) * x + m(0, 1) * y;
    b[i] = m(1, 0) * x + m(1, 1) * y;
  }
}

void left_multiply_blocks(std::span<Complex> blocks, const Matrix2& m) {
  assert(blocks.size() % 4 == 0);
  const BroadcastComplex m00(m(0, 0)), m01(m(0, 1)), m10(m(1, 0)),
      m11(m(1, 1));
  for (std::size_t i = 0; i < blocks.size(); i += 4) {
    const __m256d top = load(&blocks[i]);
    const __m256d bottom = load(&blocks[i + 2]);
    store(&blocks[i], cmul_add(m01, bottom, cmul(m00, top)));
    store(&blocks[i + 2], cmul_add(m11, bottom, cmul(m10, top)));
  }
}

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

Moments moments(std::span<const Complex> amps, double x0) {
  const std::size_t n = amps.size();
  __m256d acc_norm = _mm256_setzero_pd();
  __m256d acc_first = _mm256_setzero_pd();
  __m256d acc_second = _mm256_setzero_pd();
  // Lane weights [x, x, x + 1, x + 1] match the re/im interleave.
  __m256d x = _mm256_setr_pd(x0, x0, x0 + 1.0, x0 + 1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load(&amps[i]);
    const __m256d sq = _mm256_mul_pd(v, v);
    const __m256d xsq = _mm256_mul_pd(x, sq);
    acc_norm = _mm256_add_pd(acc_norm, sq);
    acc_first = _mm256_add_pd(acc_first, xsq);
    acc_second = _mm256_fmadd_pd(x, xsq, acc_second);
    x = _mm256_add_pd(x, two);
  }
  Moments out{horizontal_sum(acc_norm), horizontal_sum(acc_first),
              horizontal_sum(acc_second)};
  for (; i < n; ++i) {
    const double p = std::norm(amps[i]);
    const double xi = x0 + static_cast<double>(i);
    out.norm += p;
    out.first += xi * p;
    out.second += xi * xi * p;
  }
  return out;
}

void axpby(std::span<Complex> out, std::span<const Complex> in, double alpha,
           double beta) {
  assert(out.size() == in.size());
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d vb = _mm256_set1_pd(beta);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d o = load(&out[i]);
    const __m256d v = load(&in[i]);
    store(&out[i], _mm256_fmadd_pd(vb, v, _mm256_mul_pd(va, o)));
  }
  for (; i < n; ++i) out[i] = alpha * out[i] + beta * in[i];
}

constexpr KernelTable kAvx2Table{apply_pair, left_multiply_blocks, moments,
                                 axpby};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace parrondo::kernels
