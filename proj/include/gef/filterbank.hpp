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

#include <vector>

#include "gef/constants.hpp"
#include "gef/design.hpp"

namespace gef {

/// Exponential place-to-frequency map CF(x) = cf0 exp(-x / l), x in [0, x_max].
struct CfMap {
  double cf0;
  double l;
  double x_max;
};

/// Error{InvalidSpec} for non-positive cf0 or l, or negative x_max.
void validate(const CfMap& map);

/// Error{OutOfRange} when x lies outside [0, x_max].
double cf_at(const CfMap& map, double x);

/// n positions evenly spaced over [0, x_max] (log-uniform in CF).
std::vector<double> uniform_positions(const CfMap& map, std::size_t n);

struct BankChannel {
  double x;
  double f_peak;  // Hz
  FilterConstants theta;
  double gain = 1.0;
};

/// Constant-Q bank: every channel shares design(spec); f_peak = cf_at(map, x).
/// The trio must be normalized (beta_peak = 1).
std::vector<BankChannel> build_constant_q_bank(const CfMap& map,
                                               const std::vector<double>& channel_xs,
                                               const CharacteristicSpec& spec,
                                               const SolverConfig& cfg = {});

/// gain * P(f / f_peak).
Complex channel_response(const BankChannel& channel, double f_hz);

struct Band {
  double f_peak_hz;
  CharacteristicSpec spec;  // normalized trio, beta_peak = 1
  double gain = 1.0;
};

struct MultibandSpec {
  std::vector<Band> bands;
};

/// Error{InvalidSpec} unless there are >= 2 bands with strictly increasing
/// positive f_peak.
void validate(const MultibandSpec& spec);

/// Designed band, its constants carrying the peak normalization and the
/// user gain in C.
struct DesignedBand {
  double f_peak_hz;
  FilterConstants theta;
};

/// Designs every band. Each band's C is set so that |P_i(b_p)| = 1 before
/// the user gain is applied.
std::vector<DesignedBand> design_bands(const MultibandSpec& spec,
                                       const SolverConfig& cfg = {});

/// Complex sum over bands of gain_i P_i(f / f_peak_i).
Complex multiband_response(const std::vector<DesignedBand>& bands, double f_hz);
Complex multiband_response(const MultibandSpec& spec, double f_hz);

/// m[i][j]: level of band j at band i's peak frequency relative to band i's
/// own level there, in dB.
std::vector<std::vector<double>> crosstalk_report(const MultibandSpec& spec,
                                                  const SolverConfig& cfg = {});

}  // namespace gef
