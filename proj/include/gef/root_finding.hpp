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

#include <functional>

namespace gef {

struct RootOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_iter = 200;
};

struct RootResult {
  double root;
  int iterations;
};

/// Hybrid bisection/secant on a sign-changing bracket. Secant steps are
/// accepted only when they land inside the current bracket and shrink it
/// by at least half; otherwise the step is a bisection, so convergence is
/// never slower than plain bisection. Throws Error{BracketFailure} when
/// f(lo) and f(hi) have the same strict sign.
RootResult solve_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, const RootOptions& opts = {});

/// Golden-section search for the maximizer of a unimodal f on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double abs_tol);

}  // namespace gef
