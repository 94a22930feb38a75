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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gef/constants.hpp"
#include "gef/grid.hpp"
#include "gef/response.hpp"

namespace gef {

enum class Method { closed_form, numeric };

struct GridSummary {
  double beta_min;
  double tail_max;
  double dense_halfwidth;
  double dense_step;
  std::size_t samples;
  std::size_t tail_points;
};

/// Frequency-domain characteristics of one filter, either from the
/// sharp-filter closed forms or re-extracted from a sampled response.
struct CharacteristicReport {
  double beta_peak = 0.0;
  double n_beta = 0.0;     // cycles
  double phi_accum = 0.0;  // cycles
  std::optional<double> q_erb;
  std::optional<double> erb_beta;
  std::map<double, double> q_n;        // keyed by level in dB
  std::map<double, double> bw_n_beta;  // keyed by level in dB
  double s_beta = 0.0;                 // dB
  Method method = Method::closed_form;
  std::optional<GridSummary> grid;
  /// Set when ERB/Q_erb were omitted because B_u <= 1/2.
  bool erb_omitted = false;

  /// Flat snake_case view: beta_peak, n_beta, phi_accum, q_erb, erb_beta,
  /// q_<n>, bw_<n>_beta, s_beta (absent optionals are skipped).
  std::map<std::string, double> values() const;
};

/// Key fragment for a dB level: "10" for 10 dB, "2.5" for 2.5 dB.
std::string level_key(double n_db);

/// Sharp-filter forward map (closed forms for every characteristic).
CharacteristicReport closed_form(const FilterConstants& theta,
                                 std::span<const double> n_levels);

/// Exact Gamma-ratio quality factor b_p Gamma(B_u) / (sqrt(pi) A_p Gamma(B_u - 1/2)).
double qerb_exact(const FilterConstants& theta);

/// Empirical power-law approximation e^b b_p B_u^(1-a) / (2 pi A_p) with
/// a = 0.418, b = 1.02; Error{ApproximationDomain} for B_u < 3/2.
double qerb_approx(const FilterConstants& theta);

inline constexpr double kQerbApproxA = 0.418;
inline constexpr double kQerbApproxB = 1.02;

/// Numeric characteristics of an arbitrary response over `grid`.
///   beta_peak  golden-section refinement of the best sample (tol 1e-10)
///   BW_n       bisection on each side of the peak
///   ERB        composite Simpson of |H|^2 / |H(beta_peak)|^2 over the grid
///   N          max of -(1/2pi) dphi/dbeta, centred differences of the
///              unwrapped phase on the grid
///   phi_accum  (max phi - min phi) / 2pi over the grid
///   S_beta     second central difference of the level at beta_peak with
///              step 4 * dense_step
CharacteristicReport extract_numeric(const Response& response,
                                     const FrequencyGrid& grid,
                                     std::span<const double> n_levels);

/// ERB of a response over the span of `grid` (the quadrature used by
/// extract_numeric, exposed for two-sided checks).
double erb_quadrature(const Response& response, const FrequencyGrid& grid,
                      double beta_peak);

/// (desired - achieved) / desired for every characteristic in `desired`;
/// Error{MissingCharacteristic} when `achieved` lacks one.
std::map<std::string, double> relative_errors(const CharacteristicReport& desired,
                                              const CharacteristicReport& achieved);

}  // namespace gef
