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

#include "gef/error.hpp"
#include "gef/filterbank.hpp"
#include "gef/response.hpp"

using namespace gef;

namespace {

CharacteristicSpec delay_phase(double n, double phi) {
  CharacteristicSpec s;
  s.row = DesignRow::PeakDelayPhase;
  s.values = {{"n_cycles", n}, {"phi_accum", phi}};
  return s;
}

MultibandSpec two_bands() {
  MultibandSpec m;
  m.bands.push_back({1000.0, delay_phase(19.0986, 3.0), 1.0});
  m.bands.push_back({4000.0, delay_phase(19.0986, 3.0), 1.0});
  return m;
}

}  // namespace

TEST(CfMap, Values) {
  const CfMap map{20000.0, 1.0, 3.5};
  EXPECT_DOUBLE_EQ(cf_at(map, 0.0), 20000.0);
  EXPECT_NEAR(cf_at(map, std::numbers::ln2), 10000.0, 1e-9);
  EXPECT_THROW(cf_at(map, 3.6), Error);
  EXPECT_THROW(cf_at(map, -0.1), Error);
  EXPECT_THROW(validate(CfMap{0.0, 1.0, 1.0}), Error);
  EXPECT_THROW(validate(CfMap{100.0, -1.0, 1.0}), Error);

  const auto xs = uniform_positions(map, 8);
  ASSERT_EQ(xs.size(), 8u);
  EXPECT_DOUBLE_EQ(xs.front(), 0.0);
  EXPECT_DOUBLE_EQ(xs.back(), 3.5);
  // log-uniform in CF
  const double r0 = cf_at(map, xs[0]) / cf_at(map, xs[1]);
  const double r1 = cf_at(map, xs[5]) / cf_at(map, xs[6]);
  EXPECT_NEAR(r0, r1, 1e-12);
}

TEST(ConstantQBank, SharedConstantsAndScaledResponses) {
  const CfMap map{20000.0, 1.0, 3.0};
  const auto bank = build_constant_q_bank(map, uniform_positions(map, 5), delay_phase(19.0986, 3.0));
  ASSERT_EQ(bank.size(), 5u);
  for (const auto& ch : bank) {
    EXPECT_EQ(ch.theta, bank.front().theta);
    EXPECT_NEAR(ch.f_peak, cf_at(map, ch.x), 1e-9);
    // same relative position on each channel gives the same response
    const Complex h = channel_response(ch, 0.98 * ch.f_peak);
    const Complex h0 = channel_response(bank.front(), 0.98 * bank.front().f_peak);
    EXPECT_NEAR(std::abs(h - h0), 0.0, 1e-12 * std::abs(h0));
  }
  auto bad = delay_phase(19.0986, 3.0);
  bad.beta_peak = 2.0;
  EXPECT_THROW(build_constant_q_bank(map, {0.0}, bad), Error);
  EXPECT_TRUE(build_constant_q_bank(map, {}, delay_phase(19.0986, 3.0)).empty());
}

TEST(Multiband, Validation) {
  MultibandSpec one;
  one.bands.push_back({1000.0, delay_phase(19.0986, 3.0), 1.0});
  EXPECT_THROW(validate(one), Error);
  auto m = two_bands();
  std::swap(m.bands[0], m.bands[1]);
  EXPECT_THROW(validate(m), Error);
  m = two_bands();
  m.bands[1].f_peak_hz = 1000.0;
  EXPECT_THROW(validate(m), Error);
  EXPECT_NO_THROW(validate(two_bands()));
}

TEST(Multiband, UnitPeaksAndLowCrosstalk) {
  const auto spec = two_bands();
  const auto bands = design_bands(spec);
  for (const auto& b : bands) {
    EXPECT_NEAR(std::abs(eval_gef(b.theta, b.theta.b_p())), 1.0, 1e-12);
  }
  const auto m = crosstalk_report(spec);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0][0], 0.0);
  EXPECT_EQ(m[1][1], 0.0);
  EXPECT_LT(m[0][1], -40.0);
  EXPECT_LT(m[1][0], -40.0);

  // peak of the sum stays within 0.5% of each band's own peak frequency
  for (const auto& b : spec.bands) {
    double best = 0.0;
    double best_f = 0.0;
    for (int i = -2000; i <= 2000; ++i) {
      const double f = b.f_peak_hz * (1.0 + 0.1 * i / 2000.0);
      const double mag = std::abs(multiband_response(bands, f));
      if (mag > best) {
        best = mag;
        best_f = f;
      }
    }
    EXPECT_LT(std::abs(best_f - b.f_peak_hz), 0.005 * b.f_peak_hz);
  }
}

TEST(Multiband, GainAndLinearity) {
  auto spec = two_bands();
  spec.bands[1].gain = 0.25;
  const auto bands = design_bands(spec);
  EXPECT_NEAR(std::abs(eval_gef(bands[1].theta, bands[1].theta.b_p())), 0.25, 1e-12);
  const double f = 2500.0;
  const Complex sum = eval_gef(bands[0].theta, f / 1000.0) + eval_gef(bands[1].theta, f / 4000.0);
  EXPECT_NEAR(std::abs(multiband_response(spec, f) - sum), 0.0, 1e-15);
}
