// Copyright 2026 The GEF Authors
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

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace gef::kernels {
namespace {

constexpr std::size_t kLanes = 4;

void wavenumber_avx2(double a_p, double b_p, double b_u, bool sharp,
                     const double* beta, double* re, double* im,
                     std::size_t n) {
  const __m256d vb = _mm256_set1_pd(b_p);
  const __m256d va2 = _mm256_set1_pd(a_p * a_p);
  const __m256d vbua = _mm256_set1_pd(b_u * a_p);
  const __m256d vnbu = _mm256_set1_pd(-b_u);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(beta + i);
    const __m256d dm = _mm256_sub_pd(x, vb);
    const __m256d qm = _mm256_fmadd_pd(dm, dm, va2);
    __m256d r = _mm256_div_pd(vbua, qm);
    __m256d m = _mm256_div_pd(_mm256_mul_pd(vnbu, dm), qm);
    if (!sharp) {
      const __m256d dp = _mm256_add_pd(x, vb);
      const __m256d qp = _mm256_fmadd_pd(dp, dp, va2);
      r = _mm256_add_pd(r, _mm256_div_pd(vbua, qp));
      m = _mm256_add_pd(m, _mm256_div_pd(_mm256_mul_pd(vnbu, dp), qp));
    }
    _mm256_storeu_pd(re + i, r);
    _mm256_storeu_pd(im + i, m);
  }
  if (i < n) scalar_table().wavenumber(a_p, b_p, b_u, sharp, beta + i, re + i, im + i, n - i);
}

double dot_avx2(const double* w, const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + kLanes),
                           _mm256_loadu_pd(x + i + kLanes), acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += w[i] * x[i];
  return total;
}

void squared_magnitude_avx2(const double* re, const double* im, double* out,
                            std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m)));
  }
  if (i < n) scalar_table().squared_magnitude(re + i, im + i, out + i, n - i);
}

void cascade_response_avx2(const Biquad* sections, std::size_t n_sections,
                           double gain, const double* cos_w, const double* sin_w,
                           double* re, double* im, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d c = _mm256_loadu_pd(cos_w + i);
    const __m256d s = _mm256_loadu_pd(sin_w + i);
    const __m256d c2 = _mm256_fmsub_pd(_mm256_mul_pd(two, c), c, one);
    const __m256d s2 = _mm256_mul_pd(_mm256_mul_pd(two, s), c);
    __m256d acc_re = _mm256_set1_pd(gain);
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n_sections; ++k) {
      const Biquad& q = sections[k];
      const __m256d b0 = _mm256_set1_pd(q.b0);
      const __m256d b1 = _mm256_set1_pd(q.b1);
      const __m256d b2 = _mm256_set1_pd(q.b2);
      const __m256d a1 = _mm256_set1_pd(q.a1);
      const __m256d a2 = _mm256_set1_pd(q.a2);
      const __m256d nr = _mm256_fmadd_pd(b2, c2, _mm256_fmadd_pd(b1, c, b0));
      const __m256d ni = _mm256_xor_pd(sign, _mm256_fmadd_pd(b2, s2, _mm256_mul_pd(b1, s)));
      const __m256d dr = _mm256_fmadd_pd(a2, c2, _mm256_fmadd_pd(a1, c, one));
      const __m256d di = _mm256_xor_pd(sign, _mm256_fmadd_pd(a2, s2, _mm256_mul_pd(a1, s)));
      const __m256d den = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
      const __m256d hr = _mm256_div_pd(_mm256_fmadd_pd(nr, dr, _mm256_mul_pd(ni, di)), den);
      const __m256d hi = _mm256_div_pd(_mm256_fmsub_pd(ni, dr, _mm256_mul_pd(nr, di)), den);
      const __m256d tr = _mm256_fmsub_pd(acc_re, hr, _mm256_mul_pd(acc_im, hi));
      acc_im = _mm256_fmadd_pd(acc_re, hi, _mm256_mul_pd(acc_im, hr));
      acc_re = tr;
    }
    _mm256_storeu_pd(re + i, acc_re);
    _mm256_storeu_pd(im + i, acc_im);
  }
  if (i < n) {
    scalar_table().cascade_response(sections, n_sections, gain, cos_w + i,
                                    sin_w + i, re + i, im + i, n - i);
  }
}

}  // namespace

const KernelTable& avx2_table_unchecked() {
  static const KernelTable table{Isa::avx2, wavenumber_avx2, dot_avx2,
                                 squared_magnitude_avx2, cascade_response_avx2};
  return table;
}

}  // namespace gef::kernels
