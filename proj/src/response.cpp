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

#include "gef/response.hpp"

#include <cmath>
#include <numbers>

#include "gef/error.hpp"
#include "gef/kernels.hpp"

namespace gef {
namespace {

constexpr double kDbPerNeper = 20.0 / std::numbers::ln10;

void require_nonnegative(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::OutOfRange, "beta must be finite and >= 0");
  }
}

// log((s - p)(s - conj p)) at s = i beta. Both factors have real part A_p,
// so their principal logarithms vary continuously with beta.
Complex log_base(const FilterConstants& theta, double beta) {
  const double a = theta.a_p();
  const double b = theta.b_p();
  const Complex lower{a, beta - b};
  const Complex upper{a, beta + b};
  return std::log(lower) + std::log(upper);
}

Complex log_sharp_base(const FilterConstants& theta, double beta) {
  return std::log(Complex{theta.a_p(), beta - theta.b_p()});
}

}  // namespace

namespace detail {

Complex eval_gef_signed(const FilterConstants& theta, double beta) {
  return theta.gain() * std::exp(-theta.b_u() * log_base(theta, beta));
}

Complex eval_sharp_signed(const FilterConstants& theta, double beta) {
  return std::exp(-theta.b_u() * log_sharp_base(theta, beta));
}

}  // namespace detail

Complex eval_gef(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  return detail::eval_gef_signed(theta, beta);
}

Complex eval_sharp(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  return detail::eval_sharp_signed(theta, beta);
}

Complex eval_v(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  const Complex zero_factor{theta.a_p(), beta};
  return zero_factor * std::exp(-theta.b_u() * log_base(theta, beta));
}

Complex eval_zero_variant(const FilterConstants& theta, int c, double beta) {
  if (c < 0 || !(static_cast<double>(c) < theta.b_u())) {
    throw Error(ErrorKind::ZeroOrderTooLarge,
                "zero order c must satisfy 0 <= c < B_u");
  }
  require_nonnegative(beta);
  Complex s_power{1.0, 0.0};
  const Complex s{0.0, beta};
  for (int k = 0; k < c; ++k) s_power *= s;
  return s_power * std::exp(-theta.b_u() * log_base(theta, beta));
}

Complex wavenumber(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  const Complex s{0.0, beta};
  const Complex p = theta.pole();
  return theta.b_u() * (1.0 / (s - p) + 1.0 / (s - std::conj(p)));
}

double level_db(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  const double a2 = theta.a_p() * theta.a_p();
  const double dm = beta - theta.b_p();
  const double dp = beta + theta.b_p();
  return 20.0 * std::log10(theta.gain()) -
         kDbPerNeper * 0.5 * theta.b_u() *
             (std::log(a2 + dm * dm) + std::log(a2 + dp * dp));
}

double sharp_level_db(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  const double dm = beta - theta.b_p();
  return -kDbPerNeper * 0.5 * theta.b_u() *
         std::log(theta.a_p() * theta.a_p() + dm * dm);
}

double phase_rad(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  const double a = theta.a_p();
  return -theta.b_u() * (std::atan((beta - theta.b_p()) / a) +
                         std::atan((beta + theta.b_p()) / a));
}

double sharp_phase_rad(const FilterConstants& theta, double beta) {
  require_nonnegative(beta);
  return -theta.b_u() * std::atan((beta - theta.b_p()) / theta.a_p());
}

double group_delay_cycles(const FilterConstants& theta, double beta) {
  return wavenumber(theta, beta).real() / (2.0 * std::numbers::pi);
}

std::vector<double> group_delay_grid(const FilterConstants& theta,
                                     std::span<const double> betas) {
  for (double beta : betas) require_nonnegative(beta);
  std::vector<double> re(betas.size());
  std::vector<double> im(betas.size());
  kernels::wavenumber_grid(theta.a_p(), theta.b_p(), theta.b_u(), false, betas,
                           re, im);
  for (double& v : re) v /= 2.0 * std::numbers::pi;
  return re;
}

double peak_beta(const FilterConstants& theta) {
  const double d = theta.b_p() * theta.b_p() - theta.a_p() * theta.a_p();
  return d > 0.0 ? std::sqrt(d) : 0.0;
}

FilterConstants normalize_to_peak(const FilterConstants& theta) {
  const FilterConstants unit = theta.with_gain(1.0);
  const double peak_db = level_db(unit, peak_beta(unit));
  return theta.with_gain(std::pow(10.0, -peak_db / 20.0));
}

}  // namespace gef
