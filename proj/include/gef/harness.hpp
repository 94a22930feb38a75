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

#include "gef/characteristics.hpp"
#include "gef/design.hpp"

namespace gef {

enum class Target { p_sharp, p, v };

std::string_view to_string(Target t);
Target parse_target(std::string_view name);

struct ErrorRecord {
  Target target;
  CharacteristicReport desired;
  CharacteristicReport achieved;
  std::map<std::string, double> errors;  // (desired - achieved) / desired
};

/// dB levels for which Q_n and BW_n are evaluated.
inline constexpr double kEvalLevels[] = {3.0, 10.0};

/// Design from the trio, then re-extract every characteristic from P_sharp, P
/// and V on the default grid of the designed constants. Records come in
/// that order.
std::vector<ErrorRecord> evaluate_case(const CharacteristicSpec& spec,
                                       const SolverConfig& cfg = {});
/// Same, starting from constants.
std::vector<ErrorRecord> evaluate_constants(const FilterConstants& theta);

/// Q_erb/N, Q_10/N and Q_erb/Q_10 from a report's own values.
std::map<std::string, double> compound_values(const CharacteristicReport& r);

/// Per characteristic of the P record: whether |eps_V| <= |eps_P|.
std::map<std::string, bool> v_not_worse_than_p(const std::vector<ErrorRecord>& records);

struct SweepResult {
  std::vector<double> q_erb_axis;
  std::vector<double> n_axis;
  /// error_grids[key][i][j] for q_erb_axis[i], n_axis[j]; target P.
  /// Infeasible cells are empty.
  std::map<std::string, std::vector<std::vector<std::optional<double>>>> error_grids;
  /// Design constants per cell, empty when infeasible.
  std::vector<std::vector<std::optional<FilterConstants>>> designs;
  /// Failure message per cell, empty string on success.
  std::vector<std::vector<std::string>> failures;
};

/// Row II.2 (exact) over the (Q_erb, N) grid with beta_peak = 1.
SweepResult sweep(const std::vector<double>& q_erb_values,
                  const std::vector<double>& n_values, const SolverConfig& cfg = {});

struct ResponseRow {
  double beta;
  double p_sharp_level_db, p_sharp_phase_rad;
  double p_level_db, p_phase_rad;
  double v_level_db, v_phase_rad;

  friend bool operator==(const ResponseRow&, const ResponseRow&) = default;
};

struct ErrorRow {
  std::string target;
  std::string characteristic;
  double desired;
  double achieved;
  double error;

  friend bool operator==(const ErrorRow&, const ErrorRow&) = default;
};

/// Response table (801 points over [0, 2 b_p]; each level normalized to
/// the response's extracted peak, each unwrapped phase referenced to its
/// value at beta = 0) and error-bar table (every characteristic plus the
/// compound ratios, per target). All values are rounded to 13 significant
/// digits so they survive a text round trip unchanged.
struct FigureReport {
  FilterConstants theta;
  std::vector<ResponseRow> response;
  std::vector<ErrorRow> errors;
};

FigureReport figure_report(const CharacteristicSpec& spec, const SolverConfig& cfg = {});

/// x rounded to the nearest double of its "%.12e" rendering.
double round_sig13(double x);

}  // namespace gef
