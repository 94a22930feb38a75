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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace gef {

/// One second-order section, a0 normalized to 1:
///   (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2).
struct Biquad {
  double b0, b1, b2, a1, a2;

  friend bool operator==(const Biquad&, const Biquad&) = default;
};

namespace kernels {

// Data-parallel inner loops. Each has a scalar reference implementation and,
// on x86-64, an AVX2/FMA variant chosen at runtime. Variants agree to
// rounding (FMA contraction and lane-wise summation order differ).

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;

  /// k_B = B_u (1/(i beta - p) + 1/(i beta - conj p)) split into re/im.
  /// With sharp set, only the 1/(i beta - p) term is kept.
  void (*wavenumber)(double a_p, double b_p, double b_u, bool sharp,
                     const double* beta, double* re, double* im, std::size_t n);

  double (*dot)(const double* w, const double* x, std::size_t n);

  void (*squared_magnitude)(const double* re, const double* im, double* out,
                            std::size_t n);

  /// gain * prod_k section_k(z) at z = cos_w + i sin_w.
  void (*cascade_response)(const Biquad* sections, std::size_t n_sections,
                           double gain, const double* cos_w, const double* sin_w,
                           double* re, double* im, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the build or the running CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// Table selected once per process: AVX2 when available, unless the
/// environment variable GEF_ISA=scalar forces the reference path.
const KernelTable& active();

// Span front ends over active().

void wavenumber_grid(double a_p, double b_p, double b_u, bool sharp,
                     std::span<const double> beta, std::span<double> re,
                     std::span<double> im);
double dot(std::span<const double> w, std::span<const double> x);
void squared_magnitude(std::span<const double> re, std::span<const double> im,
                       std::span<double> out);
void cascade_response(std::span<const Biquad> sections, double gain,
                      std::span<const double> cos_w,
                      std::span<const double> sin_w, std::span<double> re,
                      std::span<double> im);

}  // namespace kernels
}  // namespace gef
