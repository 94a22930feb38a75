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

#include "gef/grid.hpp"

#include <algorithm>
#include <cmath>

#include "gef/error.hpp"
#include "gef/root_finding.hpp"

namespace gef {
namespace {

// Distances (measured outward from the dense edge) of a tail covering
// `length` with at most `points` samples whose first step is `step`.
std::vector<double> tail_offsets(double length, double step, std::size_t points) {
  std::vector<double> out;
  if (length <= 0.0) return out;
  const double n = static_cast<double>(points);
  if (length <= n * step) {
    const auto m = static_cast<std::size_t>(std::ceil(length / step - 1e-9));
    const double h = length / static_cast<double>(m);
    for (std::size_t k = 1; k <= m; ++k) out.push_back(h * static_cast<double>(k));
    out.back() = length;
    return out;
  }
  // step * (g^n - 1) / (g - 1) = length, g > 1.
  auto residual = [&](double g) {
    const double e = n * std::log(g);
    // log(expm1(e)) without overflow for large e
    return std::log(step) + e + std::log(-std::expm1(-e)) - std::log(g - 1.0) -
           std::log(length);
  };
  const double g = solve_bracketed(residual, 1.0 + 1e-12, 2.0,
                                   {.rel_tol = 1e-15, .abs_tol = 0.0, .max_iter = 400})
                       .root;
  double offset = 0.0;
  double h = step;
  for (std::size_t k = 0; k < points; ++k) {
    offset += h;
    h *= g;
    out.push_back(offset);
  }
  out.back() = length;
  return out;
}

}  // namespace

FrequencyGrid make_grid(const GridSpec& spec) {
  if (!(spec.dense_step > 0.0) || !(spec.dense_halfwidth > 0.0) ||
      !(spec.beta_min < spec.center) || !(spec.tail_max > spec.center)) {
    throw Error(ErrorKind::OutOfRange, "inconsistent frequency grid settings");
  }
  FrequencyGrid grid;
  grid.center = spec.center;
  grid.dense_halfwidth = spec.dense_halfwidth;
  grid.dense_step = spec.dense_step;
  grid.beta_min = spec.beta_min;
  grid.tail_max = spec.tail_max;

  const auto half = static_cast<long>(std::llround(spec.dense_halfwidth / spec.dense_step));
  std::vector<double> dense;
  dense.reserve(static_cast<std::size_t>(2 * half + 1));
  for (long k = -half; k <= half; ++k) {
    const double x = spec.center + static_cast<double>(k) * spec.dense_step;
    if (x < spec.beta_min || x > spec.tail_max) continue;
    dense.push_back(x);
  }
  // The band may be clipped by beta_min; pin the first sample to beta_min
  // without creating a sliver interval.
  if (dense.front() > spec.beta_min) {
    if (dense.front() - spec.beta_min < 0.5 * spec.dense_step) {
      dense.front() = spec.beta_min;
    }
  }
  if (dense.back() < spec.tail_max && spec.tail_max - dense.back() < 0.5 * spec.dense_step) {
    dense.back() = spec.tail_max;
  }

  const double left_edge = dense.front();
  const double right_edge = dense.back();
  const auto left = tail_offsets(left_edge - spec.beta_min, spec.dense_step, spec.points_per_tail);
  const auto right = tail_offsets(spec.tail_max - right_edge, spec.dense_step, spec.points_per_tail);

  grid.samples.reserve(left.size() + dense.size() + right.size());
  for (auto it = left.rbegin(); it != left.rend(); ++it) grid.samples.push_back(left_edge - *it);
  if (!left.empty()) grid.samples.front() = spec.beta_min;
  grid.samples.insert(grid.samples.end(), dense.begin(), dense.end());
  for (double d : right) grid.samples.push_back(right_edge + d);
  grid.tail_points = left.size() + right.size();
  return grid;
}

FrequencyGrid default_grid(const FilterConstants& theta) {
  const double a = theta.a_p();
  const double b = theta.b_p();
  return make_grid({.center = b,
                    .dense_halfwidth = 12.0 * a,
                    .dense_step = a / 200.0,
                    .beta_min = 1e-3,
                    .tail_max = b + std::max(8.0, 60.0 * a),
                    .points_per_tail = 2048});
}

std::vector<double> simpson_weights(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> w(n, 0.0);
  if (n < 2) return w;
  if (n == 2) {
    const double h = x[1] - x[0];
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  const std::size_t intervals = n - 1;
  const std::size_t paired = intervals - intervals % 2;
  for (std::size_t i = 0; i + 2 <= paired; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    const double s = (h0 + h1) / 6.0;
    w[i] += s * (2.0 - h1 / h0);
    w[i + 1] += s * (h0 + h1) * (h0 + h1) / (h0 * h1);
    w[i + 2] += s * (2.0 - h0 / h1);
  }
  if (intervals % 2 == 1) {
    const double h1 = x[n - 1] - x[n - 2];
    const double h0 = x[n - 2] - x[n - 3];
    w[n - 1] += (2.0 * h1 * h1 + 3.0 * h1 * h0) / (6.0 * (h0 + h1));
    w[n - 2] += (h1 * h1 + 3.0 * h1 * h0) / (6.0 * h0);
    w[n - 3] -= h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
  }
  return w;
}

}  // namespace gef
