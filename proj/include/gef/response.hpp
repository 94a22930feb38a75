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

#include <functional>
#include <span>
#include <vector>

#include "gef/constants.hpp"

namespace gef {

/// Frequency response in normalized frequency, beta -> H(i beta).
using Response = std::function<Complex(double)>;

// All evaluators take beta >= 0 and throw Error{OutOfRange} otherwise.

/// C ((s - p)(s - conj p))^(-B_u) at s = i beta. Non-integer exponents are
/// taken through per-factor logarithms, each of which stays on a continuous
/// branch because Re(i beta - p) = A_p > 0.
Complex eval_gef(const FilterConstants& theta, double beta);

/// Sharp-filter form (s - p)^(-B_u); the gain is not applied.
Complex eval_sharp(const FilterConstants& theta, double beta);

/// (s + A_p) ((s - p)(s - conj p))^(-B_u) with unit proportionality constant.
Complex eval_v(const FilterConstants& theta, double beta);

/// s^c ((s - p)(s - conj p))^(-B_u); Error{ZeroOrderTooLarge} unless c < B_u.
Complex eval_zero_variant(const FilterConstants& theta, int c, double beta);

/// k_B = B_u (1/(s - p) + 1/(s - conj p)).
Complex wavenumber(const FilterConstants& theta, double beta);

/// 20 log10 |P| from the two-logarithm closed form, including 20 log10 C.
double level_db(const FilterConstants& theta, double beta);
/// Sharp-form level, -(10 B_u / ln 10) ln(A_p^2 + (beta - b_p)^2).
double sharp_level_db(const FilterConstants& theta, double beta);

/// Continuous phase, -B_u [atan((beta - b_p)/A_p) + atan((beta + b_p)/A_p)].
double phase_rad(const FilterConstants& theta, double beta);
double sharp_phase_rad(const FilterConstants& theta, double beta);

/// Re{k_B} / (2 pi).
double group_delay_cycles(const FilterConstants& theta, double beta);

/// Analytic group delay over a grid, vectorized through the kernel layer.
std::vector<double> group_delay_grid(const FilterConstants& theta,
                                     std::span<const double> betas);

/// argmax_beta |P|: sqrt(b_p^2 - A_p^2), or 0 when A_p >= b_p.
double peak_beta(const FilterConstants& theta);

/// Copy of theta with C chosen so that |P(peak_beta)| = 1.
FilterConstants normalize_to_peak(const FilterConstants& theta);

namespace detail {
// Signed-frequency evaluators for internal checks (conjugate symmetry,
// two-sided quadrature). Not part of the public beta >= 0 surface.
Complex eval_gef_signed(const FilterConstants& theta, double beta);
Complex eval_sharp_signed(const FilterConstants& theta, double beta);
}  // namespace detail

}  // namespace gef
