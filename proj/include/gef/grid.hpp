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

#include <span>
#include <vector>

#include "gef/constants.hpp"

namespace gef {

/// Nonuniform beta sampling: a uniform dense band around a center plus
/// two tails whose steps grow geometrically from the dense step, so that
/// neighbouring intervals never differ by more than a few parts per
/// thousand (keeps nonuniform Simpson weights positive).
struct FrequencyGrid {
  std::vector<double> samples;
  double center = 0.0;
  double dense_halfwidth = 0.0;
  double dense_step = 0.0;
  double beta_min = 0.0;
  double tail_max = 0.0;
  std::size_t tail_points = 0;  // samples outside the dense band

  std::size_t size() const noexcept { return samples.size(); }
};

struct GridSpec {
  double center;
  double dense_halfwidth;
  double dense_step;
  double beta_min;
  double tail_max;
  std::size_t points_per_tail = 2048;
};

/// beta_min may be negative (two-sided quadrature); center is always a sample.
FrequencyGrid make_grid(const GridSpec& spec);

/// Dense band b_p +- 12 A_p at step A_p/200, tails from 1e-3 to
/// b_p + max(8, 60 A_p), 2048 points per tail.
FrequencyGrid default_grid(const FilterConstants& theta);

/// Composite Simpson weights for arbitrary strictly increasing abscissae;
/// an odd trailing interval gets the three-point end correction.
std::vector<double> simpson_weights(std::span<const double> x);

}  // namespace gef
