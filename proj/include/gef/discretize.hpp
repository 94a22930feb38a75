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

#include <optional>
#include <span>
#include <vector>

#include "gef/constants.hpp"
#include "gef/kernels.hpp"

namespace gef {

struct DigitalFilter {
  double sample_rate = 0.0;
  std::vector<Biquad> sections;
  double gain = 1.0;
  std::optional<FilterConstants> source_theta;
  std::optional<double> f_peak;
};

struct SignalBuffer {
  double sample_rate = 0.0;
  std::vector<double> samples;
};

/// Analog quadratic s^2 + c1 s + c0 in rad/s together with its pole pair.
struct AnalogQuadratic {
  double c1;
  double c0;
  Complex pole;  // upper pole; the other is its conjugate
};

/// Poles scaled by omega_peak = 2 pi f_peak; the gain scale is dropped.
AnalogQuadratic denormalize(const FilterConstants& theta, double f_peak);

/// Bilinear transform of the GEF into B_u identical biquads. The analog
/// peak sqrt(b_p^2 - A_p^2) is prewarped onto f_peak, and each section
/// carries the B_u-th root of the gain that makes |H(f_peak)| = 1.
/// Error{NyquistViolation} if f_peak >= fs/2, Error{NonIntegerExponent}
/// if B_u is not an integer.
DigitalFilter to_sos(const FilterConstants& theta, double f_peak, double fs);

/// Poles of every section (upper half-plane member of each pair).
std::vector<Complex> digital_poles(const DigitalFilter& filt);

/// gain * prod_k section_k(e^{i 2 pi f / fs}); Error{OutOfRange} outside [0, fs/2].
Complex digital_response(const DigitalFilter& filt, double f_hz);

/// digital_response over many frequencies (vectorized kernel).
std::vector<Complex> digital_response(const DigitalFilter& filt,
                                      std::span<const double> f_hz);

/// Cascaded transposed direct form II, zero initial state.
SignalBuffer apply_sos(const DigitalFilter& filt, const SignalBuffer& signal);

/// Frequency-domain filtering with the analog response. The input is zero
/// padded to the next power of two >= 2 N, multiplied bin by bin by
/// eval_gef(theta, beta(f)) and transformed back; the first N samples are
/// returned. beta(f) maps f_peak onto the analog peak of theta, so that
/// apply_fft and to_sos share their peak.
SignalBuffer apply_fft(const FilterConstants& theta, double f_peak, double fs,
                       const SignalBuffer& signal);

}  // namespace gef
