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

#include "gef/filterbank.hpp"

#include <cmath>

#include "gef/error.hpp"
#include "gef/response.hpp"

namespace gef {

void validate(const CfMap& map) {
  if (!(map.cf0 > 0.0) || !(map.l > 0.0) || !(map.x_max >= 0.0) ||
      !std::isfinite(map.cf0) || !std::isfinite(map.l) || !std::isfinite(map.x_max)) {
    throw Error(ErrorKind::InvalidSpec, "CF map needs cf0 > 0, l > 0, x_max >= 0");
  }
}

double cf_at(const CfMap& map, double x) {
  validate(map);
  if (!(x >= 0.0 && x <= map.x_max)) {
    throw Error(ErrorKind::OutOfRange, "x outside the CF map range");
  }
  return map.cf0 * std::exp(-x / map.l);
}

std::vector<double> uniform_positions(const CfMap& map, std::size_t n) {
  validate(map);
  std::vector<double> xs(n);
  if (n == 1) xs[0] = 0.0;
  for (std::size_t i = 0; n > 1 && i < n; ++i) {
    xs[i] = map.x_max * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return xs;
}

std::vector<BankChannel> build_constant_q_bank(const CfMap& map,
                                               const std::vector<double>& channel_xs,
                                               const CharacteristicSpec& spec,
                                               const SolverConfig& cfg) {
  validate(map);
  if (spec.beta_peak != 1.0) {
    throw Error(ErrorKind::InvalidSpec, "constant-Q banks take a normalized spec (beta_peak = 1)");
  }
  std::vector<BankChannel> bank;
  if (channel_xs.empty()) return bank;
  const FilterConstants theta = design(spec, cfg).theta;
  bank.reserve(channel_xs.size());
  for (double x : channel_xs) bank.push_back({x, cf_at(map, x), theta, 1.0});
  return bank;
}

Complex channel_response(const BankChannel& channel, double f_hz) {
  return channel.gain * eval_gef(channel.theta, f_hz / channel.f_peak);
}

void validate(const MultibandSpec& spec) {
  if (spec.bands.size() < 2) {
    throw Error(ErrorKind::InvalidSpec, "multiband filters need at least two bands");
  }
  double prev = 0.0;
  for (const auto& band : spec.bands) {
    if (!(band.f_peak_hz > prev) || !std::isfinite(band.f_peak_hz)) {
      throw Error(ErrorKind::InvalidSpec, "band peak frequencies must increase strictly");
    }
    if (!std::isfinite(band.gain)) throw Error(ErrorKind::InvalidSpec, "band gain not finite");
    prev = band.f_peak_hz;
  }
}

std::vector<DesignedBand> design_bands(const MultibandSpec& spec, const SolverConfig& cfg) {
  validate(spec);
  std::vector<DesignedBand> out;
  out.reserve(spec.bands.size());
  for (const auto& band : spec.bands) {
    const FilterConstants unit = design(band.spec, cfg).theta;
    const double peak = std::abs(eval_gef(unit, unit.b_p()));
    out.push_back({band.f_peak_hz, unit.with_gain(band.gain / peak)});
  }
  return out;
}

Complex multiband_response(const std::vector<DesignedBand>& bands, double f_hz) {
  Complex sum{0.0, 0.0};
  for (const auto& band : bands) sum += eval_gef(band.theta, f_hz / band.f_peak_hz);
  return sum;
}

Complex multiband_response(const MultibandSpec& spec, double f_hz) {
  return multiband_response(design_bands(spec), f_hz);
}

std::vector<std::vector<double>> crosstalk_report(const MultibandSpec& spec,
                                                  const SolverConfig& cfg) {
  const auto bands = design_bands(spec, cfg);
  const std::size_t n = bands.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double f = bands[i].f_peak_hz;
    const double own = std::abs(eval_gef(bands[i].theta, f / bands[i].f_peak_hz));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double other = std::abs(eval_gef(bands[j].theta, f / bands[j].f_peak_hz));
      m[i][j] = 20.0 * std::log10(other / own);
    }
  }
  return m;
}

}  // namespace gef
