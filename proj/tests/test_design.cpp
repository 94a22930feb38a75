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
#include <numbers>

#include "gef/characteristics.hpp"
#include "gef/design.hpp"
#include "gef/error.hpp"

using namespace gef;

namespace {

constexpr double kPi = std::numbers::pi;

CharacteristicSpec make_spec(DesignRow row, std::map<std::string, double, std::less<>> values,
                             std::optional<double> n_level = std::nullopt,
                             SolveMode mode = SolveMode::exact, double beta = 1.0) {
  CharacteristicSpec s;
  s.row = row;
  s.beta_peak = beta;
  s.values = std::move(values);
  s.n_level = n_level;
  s.mode = mode;
  return s;
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no gef::Error thrown";
  return ErrorKind::Io;
}

const DesignRow kAllRows[] = {
    DesignRow::PeakDelayPhase,     DesignRow::PeakDelayQerb,      DesignRow::PeakQerbPhase,
    DesignRow::PeakQnPhase,        DesignRow::PeakConvexityDelay, DesignRow::PeakConvexityPhase,
    DesignRow::PeakQnDelay};

}  // namespace

TEST(Rows, LabelsAndKeys) {
  EXPECT_EQ(row_label(DesignRow::PeakDelayPhase), "II.1");
  EXPECT_EQ(row_label(DesignRow::PeakQnDelay), "II.7");
  EXPECT_EQ(parse_row("II.3"), DesignRow::PeakQerbPhase);
  EXPECT_EQ(parse_row("6"), DesignRow::PeakConvexityPhase);
  EXPECT_EQ(kind_of([] { parse_row("II.8"); }), ErrorKind::InvalidSpec);
  EXPECT_TRUE(row_uses_qn(DesignRow::PeakQnPhase));
  EXPECT_FALSE(row_uses_qn(DesignRow::PeakDelayQerb));
  EXPECT_EQ(required_keys(DesignRow::PeakConvexityDelay).size(), 2u);
}

TEST(Design, DelayPhase) {
  const auto r = design(make_spec(DesignRow::PeakDelayPhase, {{"n_cycles", 19.0986}, {"phi_accum", 3.0}}));
  EXPECT_NEAR(r.theta.a_p(), 3.0 / (kPi * 19.0986), 1e-15);
  EXPECT_NEAR(r.theta.a_p(), 0.05, 1e-6);
  EXPECT_DOUBLE_EQ(r.theta.b_u(), 6.0);
  EXPECT_DOUBLE_EQ(r.theta.b_p(), 1.0);
  EXPECT_TRUE(r.sharpness.satisfied);
  EXPECT_TRUE(r.warnings.empty());
}

// Implicit rows against a 40-digit solve of the same equations.
TEST(Design, DelayQerbFrozen) {
  struct Case { double q, n, bu, a; };
  const Case cases[] = {{25.87, 19.0986, 5.9994621681301029, 0.049995500191151471},
                        {20.0, 18.0, 9.3677630619966334, 0.082829210946135188},
                        {14.11, 11.14, 6.9991997615727648, 0.099996161556725379}};
  for (const auto& c : cases) {
    const auto r = design(make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", c.n}, {"q_erb", c.q}}));
    EXPECT_NEAR(r.theta.b_u(), c.bu, 1e-9 * c.bu);
    EXPECT_NEAR(r.theta.a_p(), c.a, 1e-9 * c.a);
    ASSERT_TRUE(r.alternate_a_p.has_value());
    EXPECT_NEAR(*r.alternate_a_p, c.a, 1e-8 * c.a);
    EXPECT_GT(r.solver_iterations, 0);
  }
}

TEST(Design, QnDelayFrozen) {
  auto r = design(make_spec(DesignRow::PeakQnDelay, {{"n_cycles", 19.0986}, {"q_n", 14.62}}, 10.0));
  EXPECT_NEAR(r.theta.b_u(), 6.0007990301662299, 1e-9 * 6);
  EXPECT_NEAR(r.theta.a_p(), 0.050006640704135748, 1e-9 * 0.05);
  r = design(make_spec(DesignRow::PeakQnDelay, {{"n_cycles", 19.0986}, {"q_n", 28.6}}, 3.0));
  EXPECT_NEAR(r.theta.b_u(), 6.0123802604913643, 1e-9 * 6);
  EXPECT_NEAR(r.theta.a_p(), 0.050103150922336605, 1e-9 * 0.05);
}

TEST(Design, ApproximateModes) {
  const auto r = design(make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", 19.0986}, {"q_erb", 25.87}},
                                  std::nullopt, SolveMode::approx));
  EXPECT_NEAR(r.theta.b_u(), 5.56, 0.01);
  EXPECT_NEAR(qerb_approx(r.theta), 25.87, 1e-9 * 25.87);
  EXPECT_NEAR(r.theta.a_p() * 2 * kPi * 19.0986, r.theta.b_u(), 1e-12);

  // large-B_u expansion of the Q_n equation
  const auto q = design(make_spec(DesignRow::PeakQnDelay, {{"n_cycles", 19.0986}, {"q_n", 14.62}},
                                  10.0, SolveMode::approx));
  const double target = 14.62 / 19.0986;
  EXPECT_NEAR(q.theta.b_u(), 10 * kPi * kPi / (10 * std::numbers::ln10 * target * target), 1e-12);

  EXPECT_EQ(kind_of([] {
              design(make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", 10.0}, {"q_erb", 40.0}},
                               std::nullopt, SolveMode::approx));
            }),
            ErrorKind::ApproximationDomain);
}

TEST(Design, RoundTripEveryRow) {
  for (double a : {0.01, 0.05, 0.12}) {
    for (double bu : {2.0, 4.0, 6.0, 11.5}) {
      const FilterConstants t(a, 1.0, bu);
      for (DesignRow row : kAllRows) {
        const auto spec = CharacteristicSpec::from_constants(
            row, t, row_uses_qn(row) ? std::optional<double>(10.0) : std::nullopt);
        const auto r = design(spec);
        EXPECT_NEAR(r.theta.a_p(), a, 1e-7 * a) << row_label(row) << " " << a << " " << bu;
        EXPECT_NEAR(r.theta.b_u(), bu, 1e-7 * bu) << row_label(row) << " " << a << " " << bu;
      }
    }
  }
}

TEST(Design, PeakScaleDoesNotChangeExponent) {
  const auto unit = design(make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", 19.0986}, {"q_erb", 25.87}}));
  for (double beta : {0.25, 3.0, 40.0}) {
    // Q_erb scales with nothing, N with 1/beta under frequency scaling.
    const auto r = design(make_spec(DesignRow::PeakDelayQerb,
                                    {{"n_cycles", 19.0986 / beta}, {"q_erb", 25.87}},
                                    std::nullopt, SolveMode::exact, beta));
    EXPECT_NEAR(r.theta.b_u(), unit.theta.b_u(), 1e-9);
    EXPECT_NEAR(r.theta.a_p(), beta * unit.theta.a_p(), 1e-9 * beta);
  }
}

// The second characteristic fixes B_u independently of the third on II.2:
// A_p follows N alone once B_u is known.
TEST(Design, DelayQerbIndependence) {
  for (double ratio : {1.2, 1.3, 1.4}) {
    double first_bu = 0.0;
    for (double n : {5.0, 19.0986, 80.0}) {
      const auto r = design(make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", n}, {"q_erb", ratio * n}}));
      if (first_bu == 0.0) first_bu = r.theta.b_u();
      EXPECT_NEAR(r.theta.b_u(), first_bu, 1e-9 * first_bu);
      EXPECT_NEAR(r.theta.a_p(), r.theta.b_u() / (2 * kPi * n), 1e-14);
    }
  }
}

TEST(Design, InfeasibleAboveResidualMaximum) {
  // Q_erb / N beyond the maximum of the residual (about 2.1 at B_u ~ 1.35)
  EXPECT_EQ(kind_of([] {
              design(make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", 10.0}, {"q_erb", 30.0}}));
            }),
            ErrorKind::BracketFailure);
}

TEST(Design, IntegerSnap) {
  auto spec = make_spec(DesignRow::PeakDelayQerb, {{"n_cycles", 19.0986}, {"q_erb", 25.87}});
  spec.integer_snap = true;
  const auto r = design(spec);
  EXPECT_DOUBLE_EQ(r.theta.b_u(), 6.0);
  EXPECT_TRUE(r.theta.is_integer_exponent());
  EXPECT_NEAR(r.theta.a_p(), 6.0 / (2 * kPi * 19.0986), 1e-15);
  ASSERT_FALSE(r.warnings.empty());

  auto s6 = make_spec(DesignRow::PeakConvexityPhase, {{"s_beta", 20846.0}, {"phi_accum", 2.7}});
  s6.integer_snap = true;
  const auto r6 = design(s6);
  EXPECT_DOUBLE_EQ(r6.theta.b_u(), 5.0);
  EXPECT_NEAR(closed_form(r6.theta, {}).s_beta, 20846.0, 1e-9 * 20846.0);
}

TEST(Design, ConvexityRows) {
  const FilterConstants t(0.05, 1.0, 6.0);
  const double s = closed_form(t, {}).s_beta;
  const auto r5 = design(make_spec(DesignRow::PeakConvexityDelay, {{"s_beta", s}, {"n_cycles", 6.0 / (2 * kPi * 0.05)}}));
  EXPECT_NEAR(r5.theta.a_p(), 0.05, 1e-12);
  EXPECT_NEAR(r5.theta.b_u(), 6.0, 1e-11);
  const auto r6 = design(make_spec(DesignRow::PeakConvexityPhase, {{"s_beta", s}, {"phi_accum", 3.0}}));
  EXPECT_NEAR(r6.theta.a_p(), 0.05, 1e-12);
}

TEST(Design, SharpnessWarning) {
  const auto r = design(make_spec(DesignRow::PeakDelayPhase, {{"n_cycles", 2.0}, {"phi_accum", 2.0}}));
  EXPECT_FALSE(r.sharpness.satisfied);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Validate, Rejections) {
  EXPECT_EQ(kind_of([] { design(make_spec(DesignRow::PeakDelayPhase, {{"n_cycles", 19.0}})); }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] {
              design(make_spec(DesignRow::PeakDelayPhase,
                               {{"n_cycles", 19.0}, {"phi_accum", 3.0}, {"q_erb", 25.0}}));
            }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] { design(make_spec(DesignRow::PeakDelayPhase, {{"n_cycles", -1.0}, {"phi_accum", 3.0}})); }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] { design(make_spec(DesignRow::PeakQnPhase, {{"q_n", 10.0}, {"phi_accum", 3.0}})); }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] {
              design(make_spec(DesignRow::PeakDelayPhase, {{"n_cycles", 19.0}, {"phi_accum", 3.0}}, 10.0));
            }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] {
              design(make_spec(DesignRow::PeakDelayPhase, {{"n_cycles", 19.0}, {"phi_accum", 3.0}},
                               std::nullopt, SolveMode::exact, 0.0));
            }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([] { design(make_spec(DesignRow::PeakQerbPhase, {{"q_erb", 10.0}, {"phi_accum", 0.2}})); }),
            ErrorKind::ErbRequiresBu);
}

TEST(ParameterizedTf, DelayPhase) {
  const auto q = parameterized_tf(make_spec(DesignRow::PeakDelayPhase,
                                            {{"n_cycles", 6.0 / (2 * kPi * 0.05)}, {"phi_accum", 3.0}}));
  EXPECT_DOUBLE_EQ(q.c2, 1.0);
  EXPECT_NEAR(q.c1, 0.1, 1e-14);
  EXPECT_NEAR(q.c0, 1.0025, 1e-14);
  EXPECT_DOUBLE_EQ(q.exponent, -6.0);
}

TEST(ParameterizedTf, AgreesWithDesign) {
  const FilterConstants t(0.07, 1.0, 4.5);
  for (DesignRow row : kAllRows) {
    const auto spec = CharacteristicSpec::from_constants(
        row, t, row_uses_qn(row) ? std::optional<double>(3.0) : std::nullopt);
    const auto q = parameterized_tf(spec);
    EXPECT_NEAR(q.c1, 0.14, 1e-8) << row_label(row);
    EXPECT_NEAR(q.c0, 1.0049, 1e-8) << row_label(row);
    EXPECT_NEAR(q.exponent, -4.5, 1e-7) << row_label(row);
  }
}
