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

#include <complex>

namespace gef {

using Complex = std::complex<double>;

/// Pole geometry and exponent of a generalized-exponent filter,
///   P(s) = C ((s - p)(s - conj(p)))^(-B_u),  p = -A_p + i b_p,
/// in normalized frequency (s = i beta).
class FilterConstants {
 public:
  /// Throws Error{NonPositiveConstant} unless a_p, b_p, b_u and gain are > 0.
  FilterConstants(double a_p, double b_p, double b_u, double gain = 1.0);

  double a_p() const noexcept { return a_p_; }
  double b_p() const noexcept { return b_p_; }
  double b_u() const noexcept { return b_u_; }
  double gain() const noexcept { return gain_; }

  /// Upper-half-plane pole -A_p + i b_p.
  Complex pole() const noexcept { return {-a_p_, b_p_}; }

  bool is_integer_exponent() const noexcept { return integer_exponent_; }
  /// Nearest integer to B_u; meaningful when is_integer_exponent().
  int integer_exponent() const noexcept;

  FilterConstants with_gain(double gain) const {
    return FilterConstants(a_p_, b_p_, b_u_, gain);
  }

  friend bool operator==(const FilterConstants&, const FilterConstants&) = default;

 private:
  double a_p_;
  double b_p_;
  double b_u_;
  double gain_;
  bool integer_exponent_;
};

inline FilterConstants make_constants(double a_p, double b_p, double b_u,
                                      double gain = 1.0) {
  return FilterConstants(a_p, b_p, b_u, gain);
}

struct SharpnessReport {
  double a_p;
  double alpha_at_peak;  // A_p / (2 b_p)
  bool satisfied;        // A_p < 0.2 b_p
};

SharpnessReport sharpness_check(const FilterConstants& theta);

}  // namespace gef
