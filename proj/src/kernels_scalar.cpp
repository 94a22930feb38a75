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

#include "kernels_internal.hpp"

namespace gef::kernels {
namespace {

void wavenumber_scalar(double a_p, double b_p, double b_u, bool sharp,
                       const double* beta, double* re, double* im,
                       std::size_t n) {
  const double a2 = a_p * a_p;
  for (std::size_t i = 0; i < n; ++i) {
    const double dm = beta[i] - b_p;
    const double qm = a2 + dm * dm;
    double r = b_u * a_p / qm;
    double m = -b_u * dm / qm;
    if (!sharp) {
      const double dp = beta[i] + b_p;
      const double qp = a2 + dp * dp;
      r += b_u * a_p / qp;
      m += -b_u * dp / qp;
    }
    re[i] = r;
    im[i] = m;
  }
}

double dot_scalar(const double* w, const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * x[i];
  return acc;
}

void squared_magnitude_scalar(const double* re, const double* im, double* out,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

void cascade_response_scalar(const Biquad* sections, std::size_t n_sections,
                             double gain, const double* cos_w,
                             const double* sin_w, double* re, double* im,
                             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    // z^-1 = c - i s, z^-2 = cos 2w - i sin 2w
    const double c = cos_w[i];
    const double s = sin_w[i];
    const double c2 = 2.0 * c * c - 1.0;
    const double s2 = 2.0 * s * c;
    double acc_re = gain;
    double acc_im = 0.0;
    for (std::size_t k = 0; k < n_sections; ++k) {
      const Biquad& q = sections[k];
      const double nr = q.b0 + q.b1 * c + q.b2 * c2;
      const double ni = -(q.b1 * s + q.b2 * s2);
      const double dr = 1.0 + q.a1 * c + q.a2 * c2;
      const double di = -(q.a1 * s + q.a2 * s2);
      const double den = dr * dr + di * di;
      const double hr = (nr * dr + ni * di) / den;
      const double hi = (ni * dr - nr * di) / den;
      const double tr = acc_re * hr - acc_im * hi;
      acc_im = acc_re * hi + acc_im * hr;
      acc_re = tr;
    }
    re[i] = acc_re;
    im[i] = acc_im;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, wavenumber_scalar, dot_scalar,
                                 squared_magnitude_scalar,
                                 cascade_response_scalar};
  return table;
}

}  // namespace gef::kernels
