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

#include "gef/discretize.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numbers>

#include "gef/error.hpp"
#include "gef/response.hpp"

namespace gef {
namespace {

constexpr double kPi = std::numbers::pi;

void require_rate(double fs) {
  if (!(fs > 0.0) || !std::isfinite(fs)) {
    throw Error(ErrorKind::InvalidSpec, "sample rate must be positive");
  }
}

void require_below_nyquist(double f_peak, double fs) {
  require_rate(fs);
  if (!(f_peak > 0.0) || !std::isfinite(f_peak)) {
    throw Error(ErrorKind::InvalidSpec, "f_peak must be positive");
  }
  if (f_peak >= fs / 2.0) {
    throw Error(ErrorKind::NyquistViolation, "f_peak must lie below fs/2");
  }
}

// Frequency at which beta = 1, chosen so the magnitude peak of P falls
// on f_peak.
double beta_at_peak(const FilterConstants& theta) {
  const double beta = peak_beta(theta);
  if (!(beta > 0.0)) {
    throw Error(ErrorKind::NoInteriorPeak, "A_p >= b_p: response has no interior peak");
  }
  return beta;
}

Complex section_response(const Biquad& q, double w) {
  const Complex z1 = std::polar(1.0, -w);
  const Complex z2 = z1 * z1;
  return (q.b0 + q.b1 * z1 + q.b2 * z2) / (1.0 + q.a1 * z1 + q.a2 * z2);
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

AnalogQuadratic denormalize(const FilterConstants& theta, double f_peak) {
  if (!(f_peak > 0.0) || !std::isfinite(f_peak)) {
    throw Error(ErrorKind::InvalidSpec, "f_peak must be positive");
  }
  const double w = 2.0 * kPi * f_peak;
  const double a = theta.a_p();
  const double b = theta.b_p();
  return {2.0 * a * w, w * w * (b * b + a * a), Complex{-a * w, b * w}};
}

DigitalFilter to_sos(const FilterConstants& theta, double f_peak, double fs) {
  require_below_nyquist(f_peak, fs);
  if (!theta.is_integer_exponent()) {
    throw Error(ErrorKind::NonIntegerExponent,
                "second-order sections need integer B_u; use apply_fft");
  }
  const int order = theta.integer_exponent();
  const double w_ref = 2.0 * fs * std::tan(kPi * f_peak / fs) / beta_at_peak(theta);
  const Complex pole = w_ref * theta.pole();
  const double k = 2.0 * fs;
  const Complex zp = (k + pole) / (k - pole);

  Biquad q{1.0, 2.0, 1.0, -2.0 * zp.real(), std::norm(zp)};
  const double m = std::abs(section_response(q, 2.0 * kPi * f_peak / fs));
  q.b0 /= m;
  q.b1 /= m;
  q.b2 /= m;

  DigitalFilter filt;
  filt.sample_rate = fs;
  filt.sections.assign(static_cast<std::size_t>(order), q);
  filt.gain = 1.0;
  filt.source_theta = theta;
  filt.f_peak = f_peak;
  return filt;
}

std::vector<Complex> digital_poles(const DigitalFilter& filt) {
  std::vector<Complex> poles;
  for (const auto& q : filt.sections) {
    // z^2 + a1 z + a2 = 0
    const Complex disc = std::sqrt(Complex{q.a1 * q.a1 - 4.0 * q.a2, 0.0});
    const Complex r1 = (-q.a1 + disc) / 2.0;
    const Complex r2 = (-q.a1 - disc) / 2.0;
    poles.push_back(r1.imag() >= r2.imag() ? r1 : r2);
    if (std::abs(disc.imag()) == 0.0) poles.push_back(r1.imag() >= r2.imag() ? r2 : r1);
  }
  return poles;
}

Complex digital_response(const DigitalFilter& filt, double f_hz) {
  require_rate(filt.sample_rate);
  if (!(f_hz >= 0.0 && f_hz <= filt.sample_rate / 2.0)) {
    throw Error(ErrorKind::OutOfRange, "frequency outside [0, fs/2]");
  }
  const double w = 2.0 * kPi * f_hz / filt.sample_rate;
  Complex h = filt.gain;
  for (const auto& q : filt.sections) h *= section_response(q, w);
  return h;
}

std::vector<Complex> digital_response(const DigitalFilter& filt,
                                      std::span<const double> f_hz) {
  require_rate(filt.sample_rate);
  const std::size_t n = f_hz.size();
  std::vector<double> c(n), s(n), re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(f_hz[i] >= 0.0 && f_hz[i] <= filt.sample_rate / 2.0)) {
      throw Error(ErrorKind::OutOfRange, "frequency outside [0, fs/2]");
    }
    const double w = 2.0 * kPi * f_hz[i] / filt.sample_rate;
    c[i] = std::cos(w);
    s[i] = std::sin(w);
  }
  kernels::cascade_response(filt.sections, filt.gain, c, s, re, im);
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {re[i], im[i]};
  return out;
}

SignalBuffer apply_sos(const DigitalFilter& filt, const SignalBuffer& signal) {
  if (signal.sample_rate != filt.sample_rate) {
    throw Error(ErrorKind::SampleRateMismatch, "signal and filter sample rates differ");
  }
  SignalBuffer out{signal.sample_rate, signal.samples};
  for (double& v : out.samples) v *= filt.gain;
  for (const auto& q : filt.sections) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (double& v : out.samples) {
      const double x = v;
      const double y = q.b0 * x + s1;
      s1 = q.b1 * x - q.a1 * y + s2;
      s2 = q.b2 * x - q.a2 * y;
      v = y;
    }
  }
  return out;
}

SignalBuffer apply_fft(const FilterConstants& theta, double f_peak, double fs,
                       const SignalBuffer& signal) {
  require_below_nyquist(f_peak, fs);
  if (signal.sample_rate != fs) {
    throw Error(ErrorKind::SampleRateMismatch, "signal and filter sample rates differ");
  }
  const std::size_t n = signal.samples.size();
  SignalBuffer out{fs, std::vector<double>(n, 0.0)};
  if (n == 0) return out;
  const double beta_scale = beta_at_peak(theta) / f_peak;

  const std::size_t m = std::bit_ceil(2 * n);
  const std::size_t bins = m / 2 + 1;
  std::unique_ptr<double, FftwFree> time(fftw_alloc_real(m));
  std::unique_ptr<fftw_complex, FftwFree> spec(fftw_alloc_complex(bins));
  const int len = static_cast<int>(m);
  fftw_plan forward = fftw_plan_dft_r2c_1d(len, time.get(), spec.get(), FFTW_ESTIMATE);
  fftw_plan inverse = fftw_plan_dft_c2r_1d(len, spec.get(), time.get(), FFTW_ESTIMATE);

  std::copy(signal.samples.begin(), signal.samples.end(), time.get());
  std::fill(time.get() + n, time.get() + m, 0.0);
  fftw_execute(forward);
  for (std::size_t k = 0; k < bins; ++k) {
    const double f = fs * static_cast<double>(k) / static_cast<double>(m);
    const Complex h = eval_gef(theta, beta_scale * f);
    const Complex x{spec.get()[k][0], spec.get()[k][1]};
    const Complex y = h * x;
    spec.get()[k][0] = y.real();
    spec.get()[k][1] = y.imag();
  }
  fftw_execute(inverse);
  fftw_destroy_plan(forward);
  fftw_destroy_plan(inverse);

  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = time.get()[i] * scale;
  return out;
}

}  // namespace gef
