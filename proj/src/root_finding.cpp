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

#include "gef/root_finding.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "gef/error.hpp"

namespace gef {

RootResult solve_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, const RootOptions& opts) {
  if (lo > hi) std::swap(lo, hi);
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0};
  if (f_hi == 0.0) return {hi, 0};
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream msg;
    msg << "residual does not change sign on [" << lo << ", " << hi
        << "]: f(lo)=" << f_lo << ", f(hi)=" << f_hi;
    throw Error(ErrorKind::BracketFailure, msg.str());
  }

  for (int it = 1; it <= opts.max_iter; ++it) {
    const double width = hi - lo;
    double x = lo - f_lo * width / (f_hi - f_lo);
    const double mid = 0.5 * (lo + hi);
    // Regula-falsi stagnation guard: fall back to the midpoint when the
    // secant point sits in the outer quarters of the bracket.
    if (!(x > lo && x < hi) || std::abs(x - mid) > 0.25 * width) x = mid;

    const double fx = f(x);
    if (fx == 0.0) return {x, it};
    if ((fx > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    const double tol = opts.abs_tol + opts.rel_tol * std::max(std::abs(lo), std::abs(hi));
    if (hi - lo <= tol) {
      return {std::abs(f_lo) < std::abs(f_hi) ? lo : hi, it};
    }
  }
  return {std::abs(f_lo) < std::abs(f_hi) ? lo : hi, opts.max_iter};
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double abs_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > abs_tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gef
