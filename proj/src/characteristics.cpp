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

#include "gef/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gef/error.hpp"
#include "gef/kernels.hpp"
#include "gef/root_finding.hpp"

namespace gef {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDbPerNeper = 20.0 / std::numbers::ln10;

double level_of(const Response& response, double beta) {
  return 20.0 * std::log10(std::abs(response(beta)));
}

GridSummary summarize(const FrequencyGrid& grid) {
  return {grid.samples.front(), grid.samples.back(), grid.dense_halfwidth,
          grid.dense_step,      grid.size(),         grid.tail_points};
}

}  // namespace

std::string level_key(double n_db) {
  std::ostringstream out;
  if (n_db == std::round(n_db)) {
    out << static_cast<long long>(std::llround(n_db));
  } else {
    out << n_db;
  }
  return out.str();
}

std::map<std::string, double> CharacteristicReport::values() const {
  std::map<std::string, double> out;
  out["beta_peak"] = beta_peak;
  out["n_beta"] = n_beta;
  out["phi_accum"] = phi_accum;
  if (q_erb) out["q_erb"] = *q_erb;
  if (erb_beta) out["erb_beta"] = *erb_beta;
  for (const auto& [n, q] : q_n) out["q_" + level_key(n)] = q;
  for (const auto& [n, bw] : bw_n_beta) out["bw_" + level_key(n) + "_beta"] = bw;
  out["s_beta"] = s_beta;
  return out;
}

double qerb_exact(const FilterConstants& theta) {
  const double bu = theta.b_u();
  if (!(bu > 0.5)) {
    throw Error(ErrorKind::ExponentTooSmallForErb, "Q_erb requires B_u > 1/2");
  }
  const double gamma_ratio = std::exp(std::lgamma(bu) - std::lgamma(bu - 0.5));
  return theta.b_p() / (std::sqrt(kPi) * theta.a_p()) * gamma_ratio;
}

double qerb_approx(const FilterConstants& theta) {
  if (theta.b_u() < 1.5) {
    throw Error(ErrorKind::ApproximationDomain,
                "Q_erb power-law approximation requires B_u >= 3/2");
  }
  return std::exp(kQerbApproxB) * theta.b_p() *
         std::pow(theta.b_u(), 1.0 - kQerbApproxA) / (2.0 * kPi * theta.a_p());
}

CharacteristicReport closed_form(const FilterConstants& theta,
                                 std::span<const double> n_levels) {
  const double a = theta.a_p();
  const double b = theta.b_p();
  const double bu = theta.b_u();
  CharacteristicReport r;
  r.method = Method::closed_form;
  r.beta_peak = b;
  r.n_beta = bu / (2.0 * kPi * a);
  r.phi_accum = bu / 2.0;
  for (double n : n_levels) {
    if (!(n > 0.0)) throw Error(ErrorKind::InvalidSpec, "dB levels must be positive");
    const double root = std::sqrt(std::pow(10.0, n / (10.0 * bu)) - 1.0);
    r.bw_n_beta[n] = 2.0 * a * root;
    r.q_n[n] = b / (2.0 * a * root);
  }
  if (bu > 0.5) {
    r.q_erb = qerb_exact(theta);
    r.erb_beta = b / *r.q_erb;
  } else {
    r.erb_omitted = true;
  }
  r.s_beta = kDbPerNeper * bu / (a * a);
  return r;
}

double erb_quadrature(const Response& response, const FrequencyGrid& grid,
                      double beta_peak) {
  const std::size_t n = grid.size();
  std::vector<double> re(n), im(n), power(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex h = response(grid.samples[i]);
    re[i] = h.real();
    im[i] = h.imag();
  }
  kernels::squared_magnitude(re, im, power);
  const double peak_power = std::norm(response(beta_peak));
  const auto weights = simpson_weights(grid.samples);
  return kernels::dot(weights, power) / peak_power;
}

CharacteristicReport extract_numeric(const Response& response,
                                     const FrequencyGrid& grid,
                                     std::span<const double> n_levels) {
  const auto& x = grid.samples;
  const std::size_t n = x.size();
  if (n < 5) throw Error(ErrorKind::OutOfRange, "grid too small for extraction");

  std::vector<double> re(n), im(n), power(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex h = response(x[i]);
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) {
      throw Error(ErrorKind::OutOfRange, "response is not finite on the grid");
    }
    re[i] = h.real();
    im[i] = h.imag();
  }
  kernels::squared_magnitude(re, im, power);

  // Strict '>' keeps the smallest beta among equal maxima.
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (power[i] > power[best]) best = i;
  }
  if (best == 0 || best == n - 1) {
    throw Error(ErrorKind::NoInteriorPeak, "magnitude maximum lies on the grid boundary");
  }

  CharacteristicReport r;
  r.method = Method::numeric;
  r.grid = summarize(grid);

  auto level = [&](double beta) { return level_of(response, beta); };
  double peak = golden_section_max(level, x[best - 1], x[best + 1], 1e-10);
  if (level(peak) < level(x[best])) peak = x[best];
  r.beta_peak = peak;
  const double peak_level = level(peak);

  for (double level_n : n_levels) {
    if (!(level_n > 0.0)) throw Error(ErrorKind::InvalidSpec, "dB levels must be positive");
    auto drop = [&](double beta) { return peak_level - level(beta) - level_n; };
    auto crossing = [&](int direction) -> double {
      std::size_t j = best;
      while (true) {
        if (direction > 0 ? j + 1 >= n : j == 0) {
          std::ostringstream msg;
          msg << level_n << " dB down-crossing not reached "
              << (direction > 0 ? "above" : "below") << " the peak";
          throw Error(ErrorKind::LevelNotReached, msg.str());
        }
        j = direction > 0 ? j + 1 : j - 1;
        if ((direction > 0) == (x[j] > peak) && drop(x[j]) >= 0.0) break;
      }
      const std::size_t k = direction > 0 ? j - 1 : j + 1;
      double inner = x[k];
      if ((direction > 0 && inner < peak) || (direction < 0 && inner > peak)) inner = peak;
      if (drop(inner) >= 0.0) inner = peak;
      return solve_bracketed(drop, inner, x[j], {.rel_tol = 1e-14, .abs_tol = 1e-15}).root;
    };
    const double upper = crossing(+1);
    const double lower = crossing(-1);
    r.bw_n_beta[level_n] = upper - lower;
    r.q_n[level_n] = peak / (upper - lower);
  }

  const auto weights = simpson_weights(x);
  const double erb = kernels::dot(weights, power) / std::norm(response(peak));
  r.erb_beta = erb;
  r.q_erb = peak / erb;

  std::vector<double> phase(n);
  phase[0] = std::atan2(im[0], re[0]);
  for (std::size_t i = 1; i < n; ++i) {
    double p = std::atan2(im[i], re[i]);
    const double prev = phase[i - 1];
    p += 2.0 * kPi * std::round((prev - p) / (2.0 * kPi));
    phase[i] = p;
  }
  double max_delay = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x[i] - x[i - 1];
    const double h1 = x[i + 1] - x[i];
    const double slope = -h1 / (h0 * (h0 + h1)) * phase[i - 1] +
                         (h1 - h0) / (h0 * h1) * phase[i] +
                         h0 / (h1 * (h0 + h1)) * phase[i + 1];
    max_delay = std::max(max_delay, -slope / (2.0 * kPi));
  }
  r.n_beta = max_delay;
  const auto [lo, hi] = std::minmax_element(phase.begin(), phase.end());
  r.phi_accum = (*hi - *lo) / (2.0 * kPi);

  const double h = 4.0 * grid.dense_step;
  r.s_beta = -(level(peak + h) - 2.0 * peak_level + level(peak - h)) / (h * h);
  return r;
}

std::map<std::string, double> relative_errors(const CharacteristicReport& desired,
                                              const CharacteristicReport& achieved) {
  const auto want = desired.values();
  const auto got = achieved.values();
  std::map<std::string, double> out;
  for (const auto& [key, value] : want) {
    const auto it = got.find(key);
    if (it == got.end()) {
      throw Error(ErrorKind::MissingCharacteristic, "achieved report lacks " + key);
    }
    out[key] = (value - it->second) / value;
  }
  return out;
}

}  // namespace gef
