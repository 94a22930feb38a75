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

#include "gef/constants.hpp"

#include <cmath>
#include <sstream>

#include "gef/error.hpp"

namespace gef {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveConstant: return "NonPositiveConstant";
    case ErrorKind::ZeroOrderTooLarge: return "ZeroOrderTooLarge";
    case ErrorKind::ExponentTooSmallForErb: return "ExponentTooSmallForErb";
    case ErrorKind::ApproximationDomain: return "ApproximationDomain";
    case ErrorKind::NoInteriorPeak: return "NoInteriorPeak";
    case ErrorKind::LevelNotReached: return "LevelNotReached";
    case ErrorKind::MissingCharacteristic: return "MissingCharacteristic";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorKind::ErbRequiresBu: return "ErbRequiresBu";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NyquistViolation: return "NyquistViolation";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::SampleRateMismatch: return "SampleRateMismatch";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be a finite positive number, got " << value;
    throw Error(ErrorKind::NonPositiveConstant, msg.str());
  }
}

}  // namespace

FilterConstants::FilterConstants(double a_p, double b_p, double b_u, double gain)
    : a_p_(a_p), b_p_(b_p), b_u_(b_u), gain_(gain) {
  require_positive(a_p, "A_p");
  require_positive(b_p, "b_p");
  require_positive(b_u, "B_u");
  require_positive(gain, "gain");
  integer_exponent_ = std::abs(b_u - std::round(b_u)) <= 1e-12;
}

int FilterConstants::integer_exponent() const noexcept {
  return static_cast<int>(std::lround(b_u_));
}

SharpnessReport sharpness_check(const FilterConstants& theta) {
  return {theta.a_p(), theta.a_p() / (2.0 * theta.b_p()),
          theta.a_p() < 0.2 * theta.b_p()};
}

}  // namespace gef
