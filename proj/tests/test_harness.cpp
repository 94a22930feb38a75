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

#include <gtest/gtest.h>

#include <cmath>

#include "gef/error.hpp"
#include "gef/harness.hpp"
#include "gef/serialize.hpp"

using namespace gef;

namespace {

CharacteristicSpec delay_qerb(double n, double q) {
  CharacteristicSpec s;
  s.row = DesignRow::PeakDelayQerb;
  s.values = {{"n_cycles", n}, {"q_erb", q}};
  return s;
}

}  // namespace

TEST(Targets, Names) {
  EXPECT_EQ(to_string(Target::p_sharp), "p_sharp");
  EXPECT_EQ(parse_target("v"), Target::v);
  EXPECT_THROW(parse_target("q"), Error);
}

TEST(Evaluate, RecordsInOrderWithSmallErrors) {
  const auto recs = evaluate_constants(FilterConstants(0.05, 1.0, 6.0));
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].target, Target::p_sharp);
  EXPECT_EQ(recs[1].target, Target::p);
  EXPECT_EQ(recs[2].target, Target::v);
  for (const auto& r : recs) {
    EXPECT_EQ(r.desired.method, Method::closed_form);
    EXPECT_EQ(r.achieved.method, Method::numeric);
    for (const char* k : {"beta_peak", "n_beta", "q_erb", "q_3", "q_10", "s_beta"}) {
      ASSERT_EQ(r.errors.count(k), 1u) << k;
      EXPECT_LT(std::abs(r.errors.at(k)), 0.01) << to_string(r.target) << " " << k;
    }
  }
  // P_sharp carries the sharp closed forms exactly up to grid effects.
  // N comes from centred phase differences: O((dense_step / A_p)^2) = 8.3e-6
  EXPECT_LT(std::abs(recs[0].errors.at("n_beta")), 2e-5);
  EXPECT_LT(std::abs(recs[0].errors.at("q_10")), 1e-6);
}

TEST(Evaluate, FromSpec) {
  const auto recs = evaluate_case(delay_qerb(19.0986, 25.87));
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_NEAR(recs[1].desired.n_beta, 19.0986, 1e-6);
  EXPECT_NEAR(*recs[1].desired.q_erb, 25.87, 1e-5);
}

TEST(Compound, Values) {
  const double lv[] = {10.0};
  const auto c = compound_values(closed_form(FilterConstants(0.05, 1.0, 6.0), lv));
  EXPECT_NEAR(c.at("q_erb_over_n"), 25.868993924777907 / 19.098593171027442, 1e-12);
  EXPECT_NEAR(c.at("q_10_over_n"), 0.7655, 1e-4);
  EXPECT_NEAR(c.at("q_erb_over_q_10"), 1.769, 1e-3);
}

TEST(Compare, VAgainstP) {
  const auto recs = evaluate_constants(FilterConstants(0.05, 1.0, 6.0));
  const auto cmp = v_not_worse_than_p(recs);
  EXPECT_EQ(cmp.size(), recs[1].errors.size());
  int better = 0;
  for (const auto& [k, ok] : cmp) better += ok;
  EXPECT_GE(better, 1);
}

TEST(Sweep, GridShapeAndFailures) {
  const std::vector<double> q{15.0, 25.0, 60.0};
  const std::vector<double> n{18.0, 20.0};
  const auto s = sweep(q, n);
  EXPECT_EQ(s.q_erb_axis, q);
  EXPECT_EQ(s.n_axis, n);
  ASSERT_EQ(s.designs.size(), 3u);
  ASSERT_EQ(s.designs[0].size(), 2u);
  // Q_erb / N = 3 or more lies above the residual maximum
  EXPECT_FALSE(s.designs[2][0].has_value());
  EXPECT_FALSE(s.failures[2][0].empty());
  EXPECT_FALSE(s.error_grids.at("n_beta")[2][0].has_value());
  EXPECT_TRUE(s.designs[1][1].has_value());
  EXPECT_TRUE(s.failures[1][1].empty());
  EXPECT_LT(std::abs(*s.error_grids.at("q_erb")[1][1]), 0.01);
}

TEST(Figure, ShapesAndRoundTrip) {
  const auto rep = figure_report(delay_qerb(19.0986, 25.87));
  ASSERT_EQ(rep.response.size(), 801u);
  EXPECT_EQ(rep.response.front().beta, 0.0);
  EXPECT_EQ(rep.response.back().beta, 2.0);
  EXPECT_EQ(rep.response.front().p_phase_rad, 0.0);
  double best = -1e9;
  for (const auto& r : rep.response) best = std::max(best, r.p_level_db);
  EXPECT_LE(best, 1e-9);
  // the 801-point table can miss the peak by half a step (0.0025 / 2)
  EXPECT_GT(best, -0.05);

  EXPECT_EQ(io::parse_response_csv(io::response_csv(rep.response)), rep.response);
  EXPECT_EQ(io::parse_errors_csv(io::errors_csv(rep.errors)), rep.errors);
  bool has_compound = false;
  for (const auto& e : rep.errors) has_compound |= e.characteristic == "q_erb_over_q_10";
  EXPECT_TRUE(has_compound);
}

TEST(RoundSig13, Idempotent) {
  for (double x : {0.1, 1.0 / 3.0, -2.718281828459045e-200, 6.02214076e23}) {
    const double r = round_sig13(x);
    EXPECT_EQ(round_sig13(r), r);
    EXPECT_NEAR(r, x, 1e-12 * std::abs(x));
  }
  EXPECT_TRUE(std::isnan(round_sig13(NAN)));
}
