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

#include "gef/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "gef/error.hpp"
#include "gef/grid.hpp"
#include "gef/response.hpp"

namespace gef {
namespace {

Response response_for(Target t, const FilterConstants& theta) {
  switch (t) {
    case Target::p_sharp:
      return [theta](double beta) { return eval_sharp(theta, beta); };
    case Target::p:
      return [theta](double beta) { return eval_gef(theta, beta); };
    case Target::v:
      return [theta](double beta) { return eval_v(theta, beta); };
  }
  throw Error(ErrorKind::InvalidSpec, "unknown target");
}

constexpr Target kTargets[] = {Target::p_sharp, Target::p, Target::v};

}  // namespace

std::string_view to_string(Target t) {
  switch (t) {
    case Target::p_sharp:
      return "p_sharp";
    case Target::p:
      return "p";
    case Target::v:
      return "v";
  }
  return "?";
}

Target parse_target(std::string_view name) {
  for (Target t : kTargets) {
    if (name == to_string(t)) return t;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown target '" + std::string(name) + "'");
}

std::vector<ErrorRecord> evaluate_constants(const FilterConstants& theta) {
  const auto desired = closed_form(theta, kEvalLevels);
  const auto grid = default_grid(theta);
  std::vector<ErrorRecord> out;
  for (Target t : kTargets) {
    auto achieved = extract_numeric(response_for(t, theta), grid, kEvalLevels);
    auto errors = relative_errors(desired, achieved);
    out.push_back({t, desired, std::move(achieved), std::move(errors)});
  }
  return out;
}

std::vector<ErrorRecord> evaluate_case(const CharacteristicSpec& spec,
                                       const SolverConfig& cfg) {
  return evaluate_constants(design(spec, cfg).theta);
}

std::map<std::string, double> compound_values(const CharacteristicReport& r) {
  std::map<std::string, double> out;
  const auto q10 = r.q_n.find(10.0);
  if (r.q_erb) out["q_erb_over_n"] = *r.q_erb / r.n_beta;
  if (q10 != r.q_n.end()) {
    out["q_10_over_n"] = q10->second / r.n_beta;
    if (r.q_erb) out["q_erb_over_q_10"] = *r.q_erb / q10->second;
  }
  return out;
}

std::map<std::string, bool> v_not_worse_than_p(const std::vector<ErrorRecord>& records) {
  const ErrorRecord* p = nullptr;
  const ErrorRecord* v = nullptr;
  for (const auto& r : records) {
    if (r.target == Target::p) p = &r;
    if (r.target == Target::v) v = &r;
  }
  if (p == nullptr || v == nullptr) {
    throw Error(ErrorKind::MissingCharacteristic, "need both P and V records");
  }
  std::map<std::string, bool> out;
  for (const auto& [key, ep] : p->errors) {
    const auto it = v->errors.find(key);
    if (it != v->errors.end()) out[key] = std::abs(it->second) <= std::abs(ep);
  }
  return out;
}

SweepResult sweep(const std::vector<double>& q_erb_values,
                  const std::vector<double>& n_values, const SolverConfig& cfg) {
  SweepResult res;
  res.q_erb_axis = q_erb_values;
  res.n_axis = n_values;
  const std::size_t nq = q_erb_values.size();
  const std::size_t nn = n_values.size();
  res.designs.assign(nq, std::vector<std::optional<FilterConstants>>(nn));
  res.failures.assign(nq, std::vector<std::string>(nn));
  auto blank = std::vector<std::vector<std::optional<double>>>(
      nq, std::vector<std::optional<double>>(nn));

  for (std::size_t i = 0; i < nq; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      CharacteristicSpec spec;
      spec.row = DesignRow::PeakDelayQerb;
      spec.beta_peak = 1.0;
      spec.values.emplace(std::string(kQerb), q_erb_values[i]);
      spec.values.emplace(std::string(kNCycles), n_values[j]);
      try {
        const auto theta = design(spec, cfg).theta;
        const auto records = evaluate_constants(theta);
        for (const auto& [key, eps] : records[1].errors) {
          auto [it, fresh] = res.error_grids.try_emplace(key, blank);
          it->second[i][j] = eps;
        }
        res.designs[i][j] = theta;
      } catch (const Error& e) {
        res.failures[i][j] = std::string(to_string(e.kind())) + ": " + e.what();
      }
    }
  }
  return res;
}

double round_sig13(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return std::strtod(buf, nullptr);
}

FigureReport figure_report(const CharacteristicSpec& spec, const SolverConfig& cfg) {
  const FilterConstants theta = design(spec, cfg).theta;
  const auto records = evaluate_constants(theta);

  FigureReport rep{theta, {}, {}};
  constexpr int kPoints = 801;
  const double top = 2.0 * theta.b_p();
  double peak_mag[3];
  double phase0[3];
  double prev[3];
  for (int t = 0; t < 3; ++t) {
    const auto resp = response_for(kTargets[t], theta);
    peak_mag[t] = std::abs(resp(records[t].achieved.beta_peak));
    phase0[t] = std::arg(resp(0.0));
    prev[t] = 0.0;
  }
  for (int k = 0; k < kPoints; ++k) {
    const double beta = top * k / (kPoints - 1);
    double level[3];
    double phase[3];
    for (int t = 0; t < 3; ++t) {
      const Complex h = response_for(kTargets[t], theta)(beta);
      level[t] = 20.0 * std::log10(std::abs(h) / peak_mag[t]);
      double ph = std::arg(h) - phase0[t];
      ph += 2.0 * std::numbers::pi * std::round((prev[t] - ph) / (2.0 * std::numbers::pi));
      prev[t] = ph;
      phase[t] = ph;
    }
    rep.response.push_back({round_sig13(beta), round_sig13(level[0]), round_sig13(phase[0]),
                            round_sig13(level[1]), round_sig13(phase[1]),
                            round_sig13(level[2]), round_sig13(phase[2])});
  }

  for (const auto& r : records) {
    const std::string target(to_string(r.target));
    const auto want = r.desired.values();
    const auto got = r.achieved.values();
    for (const auto& [key, eps] : r.errors) {
      rep.errors.push_back({target, key, round_sig13(want.at(key)), round_sig13(got.at(key)),
                            round_sig13(eps)});
    }
    const auto cw = compound_values(r.desired);
    const auto ca = compound_values(r.achieved);
    for (const auto& [key, d] : cw) {
      const double a = ca.at(key);
      rep.errors.push_back({target, key, round_sig13(d), round_sig13(a),
                            round_sig13((d - a) / d)});
    }
  }
  return rep;
}

}  // namespace gef
