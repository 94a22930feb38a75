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
#include <complex>
#include <random>
#include <vector>

#include "gef/kernels.hpp"

using namespace gef;
using namespace gef::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// Lengths that exercise the vector body and every tail remainder.
const std::size_t kLengths[] = {0, 1, 3, 4, 5, 7, 8, 17, 1000, 4099};

}  // namespace

TEST(Kernels, ScalarWavenumberMatchesFormula) {
  const auto beta = random_vec(257, 0.0, 4.0, 1);
  std::vector<double> re(beta.size()), im(beta.size());
  scalar_table().wavenumber(0.05, 1.0, 6.0, false, beta.data(), re.data(), im.data(), beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::complex<double> s{0.0, beta[i]}, p{-0.05, 1.0};
    const auto k = 6.0 * (1.0 / (s - p) + 1.0 / (s - std::conj(p)));
    EXPECT_NEAR(re[i], k.real(), 1e-12 * std::abs(k));
    EXPECT_NEAR(im[i], k.imag(), 1e-12 * std::abs(k));
  }
  scalar_table().wavenumber(0.05, 1.0, 6.0, true, beta.data(), re.data(), im.data(), beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const auto k = 6.0 / (std::complex<double>{0.0, beta[i]} - std::complex<double>{-0.05, 1.0});
    EXPECT_NEAR(re[i], k.real(), 1e-12 * std::abs(k));
    EXPECT_NEAR(im[i], k.imag(), 1e-12 * std::abs(k));
  }
}

TEST(Kernels, ScalarDotAndMagnitude) {
  const std::vector<double> w{1, 2, 3, 4, 5};
  const std::vector<double> x{0.5, -1, 2, 0, 1};
  EXPECT_DOUBLE_EQ(scalar_table().dot(w.data(), x.data(), 5), 0.5 - 2 + 6 + 5);
  std::vector<double> out(5);
  scalar_table().squared_magnitude(w.data(), x.data(), out.data(), 5);
  EXPECT_DOUBLE_EQ(out[1], 5.0);
  EXPECT_DOUBLE_EQ(out[2], 13.0);
}

TEST(Kernels, ScalarCascadeMatchesDirectProduct) {
  const Biquad s1{0.3, 0.6, 0.3, -1.2, 0.5};
  const Biquad s2{1.0, -0.4, 0.1, 0.2, 0.3};
  const std::vector<Biquad> secs{s1, s2};
  const auto w = random_vec(64, 0.0, M_PI, 3);
  std::vector<double> c(w.size()), s(w.size()), re(w.size()), im(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    c[i] = std::cos(w[i]);
    s[i] = std::sin(w[i]);
  }
  scalar_table().cascade_response(secs.data(), 2, 1.7, c.data(), s.data(), re.data(), im.data(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::complex<double> zi = std::polar(1.0, -w[i]);
    std::complex<double> h = 1.7;
    for (const auto& q : secs) {
      h *= (q.b0 + q.b1 * zi + q.b2 * zi * zi) / (1.0 + q.a1 * zi + q.a2 * zi * zi);
    }
    EXPECT_NEAR(re[i], h.real(), 1e-12 * std::abs(h));
    EXPECT_NEAR(im[i], h.imag(), 1e-12 * std::abs(h));
  }
}

TEST(Kernels, ActiveHonoursAvailability) {
  const auto& t = active();
  if (avx2_table() == nullptr) {
    EXPECT_EQ(t.isa, Isa::scalar);
  }
  EXPECT_EQ(to_string(Isa::scalar), "scalar");
  EXPECT_EQ(to_string(Isa::avx2), "avx2");
}

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    simd_ = avx2_table();
    if (simd_ == nullptr) GTEST_SKIP() << "AVX2 not available";
  }
  const KernelTable* simd_ = nullptr;
};

TEST_F(Avx2Equivalence, Wavenumber) {
  for (std::size_t n : kLengths) {
    for (bool sharp : {false, true}) {
      const auto beta = random_vec(n, 0.0, 5.0, static_cast<unsigned>(n) + 11);
      std::vector<double> r0(n), i0(n), r1(n), i1(n);
      scalar_table().wavenumber(0.07, 1.3, 4.5, sharp, beta.data(), r0.data(), i0.data(), n);
      simd_->wavenumber(0.07, 1.3, 4.5, sharp, beta.data(), r1.data(), i1.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::hypot(r0[i], i0[i]);
        EXPECT_NEAR(r0[i], r1[i], 1e-13 * scale);
        EXPECT_NEAR(i0[i], i1[i], 1e-13 * scale);
      }
    }
  }
}

TEST_F(Avx2Equivalence, Dot) {
  for (std::size_t n : kLengths) {
    const auto w = random_vec(n, 0.0, 1.0, 5);
    const auto x = random_vec(n, -1.0, 1.0, 6);
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) abs_sum += std::abs(w[i] * x[i]);
    EXPECT_NEAR(scalar_table().dot(w.data(), x.data(), n), simd_->dot(w.data(), x.data(), n),
                1e-14 * abs_sum + 1e-300);
  }
}

TEST_F(Avx2Equivalence, SquaredMagnitude) {
  for (std::size_t n : kLengths) {
    const auto re = random_vec(n, -3.0, 3.0, 7);
    const auto im = random_vec(n, -3.0, 3.0, 8);
    std::vector<double> a(n), b(n);
    scalar_table().squared_magnitude(re.data(), im.data(), a.data(), n);
    simd_->squared_magnitude(re.data(), im.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-15 * a[i]);
  }
}

// Poles near the unit circle and the double zero at z = -1 make the section
// sums cancel, so both variants are held to a long double reference within
// a bound scaled by the cancellation factor of each sum.
TEST_F(Avx2Equivalence, Cascade) {
  const Biquad q{0.01, 0.02, 0.01, -1.9699321140781236, 0.9870161554497033};
  std::vector<Biquad> secs(6, q);
  for (std::size_t n : kLengths) {
    const auto w = random_vec(n, 0.0, M_PI, 9);
    std::vector<double> c(n), s(n), r0(n), i0(n), r1(n), i1(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = std::cos(w[i]);
      s[i] = std::sin(w[i]);
    }
    scalar_table().cascade_response(secs.data(), secs.size(), 0.5, c.data(), s.data(), r0.data(), i0.data(), n);
    simd_->cascade_response(secs.data(), secs.size(), 0.5, c.data(), s.data(), r1.data(), i1.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      using L = std::complex<long double>;
      const L z1{static_cast<long double>(c[i]), -static_cast<long double>(s[i])};
      const L z2 = z1 * z1;
      const long double b0 = q.b0, b1 = q.b1, b2 = q.b2, a1 = q.a1, a2 = q.a2;
      const L num = b0 + b1 * z1 + b2 * z2;
      const L den = 1.0L + a1 * z1 + a2 * z2;
      L ref = 0.5L;
      for (int k = 0; k < 6; ++k) ref *= num / den;
      const double kappa = static_cast<double>(
          (std::abs(b0) + std::abs(b1) + std::abs(b2)) / std::abs(num) +
          (1.0L + std::abs(a1) + std::abs(a2)) / std::abs(den));
      const double bound = 6.0 * 64.0 * 2.2e-16 * kappa * static_cast<double>(std::abs(ref));
      const std::complex<double> hr{static_cast<double>(ref.real()), static_cast<double>(ref.imag())};
      EXPECT_LE(std::abs(std::complex<double>{r0[i], i0[i]} - hr), bound) << "scalar, w = " << w[i];
      EXPECT_LE(std::abs(std::complex<double>{r1[i], i1[i]} - hr), bound) << "avx2, w = " << w[i];
    }
  }
}

TEST(Kernels, SpanFrontEnds) {
  const std::vector<double> w{1, 2, 3};
  const std::vector<double> x{4, 5, 6};
  EXPECT_DOUBLE_EQ(dot(w, x), 32.0);
  std::vector<double> out(3);
  squared_magnitude(w, x, out);
  EXPECT_DOUBLE_EQ(out[2], 45.0);
}
