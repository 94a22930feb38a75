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

#include "gef/design.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gef/characteristics.hpp"
#include "gef/error.hpp"
#include "gef/root_finding.hpp"

namespace gef {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn10 = std::numbers::ln10;

struct RowInfo {
  DesignRow row;
  std::string_view label;
  std::vector<std::string_view> keys;
};

const std::vector<RowInfo>& rows() {
  static const std::vector<RowInfo> table{
      {DesignRow::PeakDelayPhase, "II.1", {kNCycles, kPhiAccum}},
      {DesignRow::PeakDelayQerb, "II.2", {kNCycles, kQerb}},
      {DesignRow::PeakQerbPhase, "II.3", {kQerb, kPhiAccum}},
      {DesignRow::PeakQnPhase, "II.4", {kQn, kPhiAccum}},
      {DesignRow::PeakConvexityDelay, "II.5", {kSBeta, kNCycles}},
      {DesignRow::PeakConvexityPhase, "II.6", {kSBeta, kPhiAccum}},
      {DesignRow::PeakQnDelay, "II.7", {kQn, kNCycles}},
  };
  return table;
}

const RowInfo& info(DesignRow row) {
  for (const auto& r : rows()) {
    if (r.row == row) return r;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown design row");
}

double gamma_ratio(double bu) {  // Gamma(B_u) / Gamma(B_u - 1/2)
  return std::exp(std::lgamma(bu) - std::lgamma(bu - 0.5));
}

// Q_erb / (beta_peak N) as a function of B_u after eliminating A_p through N.
double qerb_over_delay(double bu) {
  return 2.0 * std::sqrt(kPi) * gamma_ratio(bu) / bu;
}

// Q_n / (beta_peak N) as a function of B_u after eliminating A_p through N.
double qn_over_delay(double bu, double n_db) {
  return kPi / (bu * std::sqrt(std::pow(10.0, n_db / (10.0 * bu)) - 1.0));
}

double a_from_qn(double beta, double qn, double n_db, double bu) {
  return beta / (2.0 * qn) / std::sqrt(std::pow(10.0, n_db / (10.0 * bu)) - 1.0);
}

double a_from_qerb(double beta, double qerb, double bu) {
  return beta / (std::sqrt(kPi) * qerb) * gamma_ratio(bu);
}

// Both implicit residuals rise from B_u = 1 to a single maximum (near 1.4-3
// depending on n) and then decrease monotonically. Solving on the
// decreasing branch picks the root every characteristic trio of a filter
// with B_u beyond the maximum maps back to.
struct BranchSolve {
  double b_u;
  int iterations;
};

BranchSolve solve_decreasing_branch(const std::function<double(double)>& ratio,
                                    double target, const SolverConfig& cfg) {
  const double top = golden_section_max(ratio, cfg.b_u_min, cfg.b_u_max, 1e-10);
  const double lo = std::max(cfg.b_u_min, top);
  auto residual = [&](double bu) { return ratio(bu) - target; };
  const auto res = solve_bracketed(residual, lo, cfg.b_u_max,
                                   {.rel_tol = cfg.rel_tol, .abs_tol = 0.0,
                                    .max_iter = cfg.max_iter});
  return {res.root, res.iterations};
}

void require_constant(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "design yields non-positive " << name << " (" << value << ")";
    throw Error(ErrorKind::InfeasibleSpec, msg.str());
  }
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Checks that the forward closed forms reproduce the requested trio.
void assert_round_trip(const CharacteristicSpec& spec, const FilterConstants& theta,
                       double rel) {
  std::vector<double> levels;
  if (spec.n_level) levels.push_back(*spec.n_level);
  const auto forward = closed_form(theta, levels);
  auto check = [&](std::string_view key, double achieved) {
    if (!close(spec.at(key), achieved, rel)) {
      std::ostringstream msg;
      msg << "design round trip failed for " << key << ": wanted " << spec.at(key)
          << ", closed form gives " << achieved;
      throw std::logic_error(msg.str());
    }
  };
  for (auto key : required_keys(spec.row)) {
    if (key == kNCycles) check(key, forward.n_beta);
    if (key == kPhiAccum) check(key, forward.phi_accum);
    if (key == kSBeta) check(key, forward.s_beta);
    if (key == kQn) check(key, forward.q_n.at(*spec.n_level));
    if (key == kQerb) {
      check(key, spec.mode == SolveMode::approx && spec.row == DesignRow::PeakDelayQerb
                     ? qerb_approx(theta)
                     : *forward.q_erb);
    }
  }
}

}  // namespace

std::string_view row_label(DesignRow row) { return info(row).label; }

DesignRow parse_row(std::string_view label) {
  for (const auto& r : rows()) {
    if (label == r.label || label == r.label.substr(3)) return r.row;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown design row '" + std::string(label) + "'");
}

std::vector<std::string_view> required_keys(DesignRow row) { return info(row).keys; }

bool row_uses_qn(DesignRow row) {
  return row == DesignRow::PeakQnPhase || row == DesignRow::PeakQnDelay;
}

double CharacteristicSpec::at(std::string_view key) const {
  const auto it = values.find(key);
  if (it == values.end()) {
    throw Error(ErrorKind::InvalidSpec, "characteristic trio lacks " + std::string(key));
  }
  return it->second;
}

CharacteristicSpec CharacteristicSpec::from_constants(DesignRow row,
                                                      const FilterConstants& theta,
                                                      std::optional<double> n_level) {
  CharacteristicSpec spec;
  spec.row = row;
  spec.beta_peak = theta.b_p();
  std::vector<double> levels;
  if (row_uses_qn(row)) {
    if (!n_level) throw Error(ErrorKind::InvalidSpec, "row needs an n-dB level");
    spec.n_level = n_level;
    levels.push_back(*n_level);
  }
  const auto forward = closed_form(theta, levels);
  for (auto key : required_keys(row)) {
    double v = 0.0;
    if (key == kNCycles) v = forward.n_beta;
    if (key == kPhiAccum) v = forward.phi_accum;
    if (key == kSBeta) v = forward.s_beta;
    if (key == kQn) v = forward.q_n.at(*n_level);
    if (key == kQerb) {
      if (!forward.q_erb) throw Error(ErrorKind::ErbRequiresBu, "Q_erb needs B_u > 1/2");
      v = *forward.q_erb;
    }
    spec.values.emplace(std::string(key), v);
  }
  return spec;
}

void validate(const CharacteristicSpec& spec) {
  if (!(spec.beta_peak > 0.0) || !std::isfinite(spec.beta_peak)) {
    throw Error(ErrorKind::InvalidSpec, "beta_peak must be positive");
  }
  const auto keys = required_keys(spec.row);
  for (auto key : keys) {
    const double v = spec.at(key);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidSpec, std::string(key) + " must be positive");
    }
  }
  if (spec.values.size() != keys.size()) {
    std::ostringstream msg;
    msg << "row " << row_label(spec.row) << " takes exactly";
    for (auto key : keys) msg << ' ' << key;
    throw Error(ErrorKind::InvalidSpec, msg.str());
  }
  if (row_uses_qn(spec.row)) {
    if (!spec.n_level || !(*spec.n_level > 0.0)) {
      throw Error(ErrorKind::InvalidSpec, "row needs a positive n-dB level");
    }
  } else if (spec.n_level) {
    throw Error(ErrorKind::InvalidSpec, "n-dB level given for a row without Q_n");
  }
}

DesignResult design(const CharacteristicSpec& spec, const SolverConfig& cfg) {
  validate(spec);
  if (!(cfg.b_u_min < cfg.b_u_max) || !(cfg.rel_tol > 0.0)) {
    throw Error(ErrorKind::InvalidSpec, "invalid solver configuration");
  }
  const double beta = spec.beta_peak;
  double a_p = 0.0;
  double b_u = 0.0;
  int iterations = 0;
  std::optional<double> alternate;

  switch (spec.row) {
    case DesignRow::PeakDelayPhase: {
      const double phi = spec.at(kPhiAccum);
      a_p = phi / (kPi * spec.at(kNCycles));
      b_u = 2.0 * phi;
      break;
    }
    case DesignRow::PeakDelayQerb: {
      const double n_cyc = spec.at(kNCycles);
      const double target = spec.at(kQerb) / (beta * n_cyc);
      if (spec.mode == SolveMode::approx) {
        b_u = std::exp(kQerbApproxB / kQerbApproxA) * std::pow(target, -1.0 / kQerbApproxA);
        if (b_u < 1.5) {
          throw Error(ErrorKind::ApproximationDomain,
                      "approximate Q_erb inversion gives B_u < 3/2");
        }
      } else {
        const auto solved = solve_decreasing_branch(qerb_over_delay, target, cfg);
        b_u = solved.b_u;
        iterations = solved.iterations;
      }
      a_p = b_u / (2.0 * kPi * n_cyc);
      if (b_u > 0.5) alternate = a_from_qerb(beta, spec.at(kQerb), b_u);
      break;
    }
    case DesignRow::PeakQerbPhase: {
      b_u = 2.0 * spec.at(kPhiAccum);
      if (!(b_u > 0.5)) {
        throw Error(ErrorKind::ErbRequiresBu, "Q_erb rows need B_u = 2 phi_accum > 1/2");
      }
      a_p = a_from_qerb(beta, spec.at(kQerb), b_u);
      break;
    }
    case DesignRow::PeakQnPhase: {
      b_u = 2.0 * spec.at(kPhiAccum);
      a_p = a_from_qn(beta, spec.at(kQn), *spec.n_level, b_u);
      break;
    }
    case DesignRow::PeakConvexityDelay: {
      const double n_cyc = spec.at(kNCycles);
      const double s = spec.at(kSBeta);
      a_p = 40.0 * kPi / kLn10 * n_cyc / s;
      b_u = 80.0 * kPi * kPi / kLn10 * n_cyc * n_cyc / s;
      break;
    }
    case DesignRow::PeakConvexityPhase: {
      const double phi = spec.at(kPhiAccum);
      b_u = 2.0 * phi;
      a_p = std::sqrt(40.0 / kLn10 * phi / spec.at(kSBeta));
      break;
    }
    case DesignRow::PeakQnDelay: {
      const double n_cyc = spec.at(kNCycles);
      const double n_db = *spec.n_level;
      const double target = spec.at(kQn) / (beta * n_cyc);
      if (spec.mode == SolveMode::approx) {
        // Large-B_u expansion 10^(n/10B) - 1 ~ n ln10 / (10 B).
        b_u = 10.0 * kPi * kPi / (n_db * kLn10 * target * target);
      } else {
        auto ratio = [n_db](double bu) { return qn_over_delay(bu, n_db); };
        const auto solved = solve_decreasing_branch(ratio, target, cfg);
        b_u = solved.b_u;
        iterations = solved.iterations;
      }
      a_p = b_u / (2.0 * kPi * n_cyc);
      break;
    }
  }
  require_constant(a_p, "A_p");
  require_constant(b_u, "B_u");

  std::vector<std::string> warnings;
  if (spec.integer_snap) {
    const double snapped = std::max(1.0, std::round(b_u));
    switch (spec.row) {
      case DesignRow::PeakDelayPhase:
      case DesignRow::PeakDelayQerb:
      case DesignRow::PeakConvexityDelay:
      case DesignRow::PeakQnDelay:
        a_p = snapped / (2.0 * kPi * spec.at(kNCycles));
        break;
      case DesignRow::PeakQerbPhase:
        a_p = a_from_qerb(beta, spec.at(kQerb), snapped);
        break;
      case DesignRow::PeakQnPhase:
        a_p = a_from_qn(beta, spec.at(kQn), *spec.n_level, snapped);
        break;
      case DesignRow::PeakConvexityPhase:
        a_p = std::sqrt(20.0 / kLn10 * snapped / spec.at(kSBeta));
        break;
    }
    if (snapped != b_u) {
      std::ostringstream msg;
      msg << "B_u snapped from " << b_u << " to " << snapped;
      warnings.push_back(msg.str());
    }
    b_u = snapped;
    require_constant(a_p, "A_p");
  } else {
    // Exact-mode implicit rows and the closed-form rows must reproduce
    // their trio through the forward map.
    const bool implicit = spec.row == DesignRow::PeakDelayQerb || spec.row == DesignRow::PeakQnDelay;
    const bool approx_qn = spec.row == DesignRow::PeakQnDelay && spec.mode == SolveMode::approx;
    if (!approx_qn) {
      CharacteristicSpec check = spec;
      assert_round_trip(check, FilterConstants(a_p, beta, b_u),
                        implicit && spec.mode == SolveMode::exact ? 1e-6 : 1e-9);
    }
  }

  FilterConstants theta(a_p, beta, b_u);
  const auto sharp = sharpness_check(theta);
  if (!sharp.satisfied) {
    std::ostringstream msg;
    msg << "A_p = " << a_p << " >= 0.2 b_p: sharp-filter approximation is weak";
    warnings.push_back(msg.str());
  }
  return {theta, sharp, std::move(warnings), alternate, iterations};
}

QuadraticBase parameterized_tf(const CharacteristicSpec& spec, const SolverConfig& cfg) {
  validate(spec);
  const double beta = spec.beta_peak;
  if (spec.row == DesignRow::PeakDelayPhase && !spec.integer_snap) {
    const double phi = spec.at(kPhiAccum);
    const double half = phi / (kPi * spec.at(kNCycles));
    return {1.0, 2.0 * half, beta * beta + half * half, -2.0 * phi};
  }
  if (spec.row == DesignRow::PeakConvexityDelay && !spec.integer_snap) {
    const double n_cyc = spec.at(kNCycles);
    const double s = spec.at(kSBeta);
    const double half = 40.0 * kPi * n_cyc / (kLn10 * s);
    return {1.0, 80.0 * kPi * n_cyc / (kLn10 * s), beta * beta + half * half,
            -80.0 * kPi * kPi * n_cyc * n_cyc / (kLn10 * s)};
  }
  const auto theta = design(spec, cfg).theta;
  return {1.0, 2.0 * theta.a_p(), theta.b_p() * theta.b_p() + theta.a_p() * theta.a_p(),
          -theta.b_u()};
}

}  // namespace gef
