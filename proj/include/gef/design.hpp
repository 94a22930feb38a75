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
#include <string>
#include <string_view>
#include <vector>

#include "gef/constants.hpp"

namespace gef {

/// Characteristic trios that determine (A_p, b_p, B_u). Names list the two
/// characteristics that accompany the peak frequency.
enum class DesignRow {
  PeakDelayPhase,      // II.1  beta_peak, N, phi_accum
  PeakDelayQerb,       // II.2  beta_peak, N, Q_erb
  PeakQerbPhase,       // II.3  beta_peak, Q_erb, phi_accum
  PeakQnPhase,         // II.4  beta_peak, Q_n, phi_accum
  PeakConvexityDelay,  // II.5  beta_peak, S_beta, N
  PeakConvexityPhase,  // II.6  beta_peak, S_beta, phi_accum
  PeakQnDelay,         // II.7  beta_peak, Q_n, N
};

std::string_view row_label(DesignRow row);  // "II.1" ... "II.7"
DesignRow parse_row(std::string_view label);  // accepts "II.3" or "3"

enum class SolveMode { exact, approx };

// Keys used in CharacteristicSpec::values.
inline constexpr std::string_view kNCycles = "n_cycles";
inline constexpr std::string_view kPhiAccum = "phi_accum";
inline constexpr std::string_view kQerb = "q_erb";
inline constexpr std::string_view kQn = "q_n";
inline constexpr std::string_view kSBeta = "s_beta";

/// Required value keys for a row (beta_peak is separate).
std::vector<std::string_view> required_keys(DesignRow row);
bool row_uses_qn(DesignRow row);

struct CharacteristicSpec {
  DesignRow row = DesignRow::PeakDelayPhase;
  double beta_peak = 1.0;
  std::map<std::string, double, std::less<>> values;
  std::optional<double> n_level;  // dB, rows II.4 and II.7 only
  SolveMode mode = SolveMode::exact;
  bool integer_snap = false;

  double at(std::string_view key) const;

  /// Trio of this row taken from the closed-form characteristics of theta.
  static CharacteristicSpec from_constants(DesignRow row, const FilterConstants& theta,
                                           std::optional<double> n_level = std::nullopt);
};

/// Error{InvalidSpec} unless the row's fields (and only those) are present
/// and strictly positive.
void validate(const CharacteristicSpec& spec);

struct SolverConfig {
  double b_u_min = 1.0;
  double b_u_max = 64.0;
  double rel_tol = 1e-12;
  int max_iter = 200;
};

struct DesignResult {
  FilterConstants theta;
  SharpnessReport sharpness;
  std::vector<std::string> warnings;
  /// Row II.2 only: the Gamma-ratio option for A_p, kept as a diagnostic.
  std::optional<double> alternate_a_p;
  int solver_iterations = 0;
};

/// Filter constants from a characteristic trio. b_p = beta_peak; A_p and
/// B_u follow the row's inverse map. Rows II.2 (exact mode) and II.7 solve
/// an implicit equation for B_u on the decreasing branch of its residual.
DesignResult design(const CharacteristicSpec& spec, const SolverConfig& cfg = {});

/// Characteristics-parameterized transfer function
///   (c2 s^2 + c1 s + c0)^exponent
struct QuadraticBase {
  double c2 = 1.0;
  double c1 = 0.0;
  double c0 = 0.0;
  double exponent = 0.0;
};

QuadraticBase parameterized_tf(const CharacteristicSpec& spec,
                               const SolverConfig& cfg = {});

}  // namespace gef
