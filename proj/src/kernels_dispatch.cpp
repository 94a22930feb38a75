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

#include <cstdlib>
#include <cstring>

#include "gef/error.hpp"
#include "kernels_internal.hpp"

namespace gef::kernels {

std::string_view to_string(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

const KernelTable* avx2_table() {
#if defined(GEF_HAVE_AVX2)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* table = [] {
    const char* forced = std::getenv("GEF_ISA");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
      return &scalar_table();
    }
    const KernelTable* wide = avx2_table();
    return wide != nullptr ? wide : &scalar_table();
  }();
  return *table;
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::OutOfRange, "kernel span sizes differ");
}

}  // namespace

void wavenumber_grid(double a_p, double b_p, double b_u, bool sharp,
                     std::span<const double> beta, std::span<double> re,
                     std::span<double> im) {
  require_same_size(beta.size(), re.size());
  require_same_size(beta.size(), im.size());
  active().wavenumber(a_p, b_p, b_u, sharp, beta.data(), re.data(), im.data(),
                      beta.size());
}

double dot(std::span<const double> w, std::span<const double> x) {
  require_same_size(w.size(), x.size());
  return active().dot(w.data(), x.data(), w.size());
}

void squared_magnitude(std::span<const double> re, std::span<const double> im,
                       std::span<double> out) {
  require_same_size(re.size(), im.size());
  require_same_size(re.size(), out.size());
  active().squared_magnitude(re.data(), im.data(), out.data(), re.size());
}

void cascade_response(std::span<const Biquad> sections, double gain,
                      std::span<const double> cos_w,
                      std::span<const double> sin_w, std::span<double> re,
                      std::span<double> im) {
  require_same_size(cos_w.size(), sin_w.size());
  require_same_size(cos_w.size(), re.size());
  require_same_size(cos_w.size(), im.size());
  active().cascade_response(sections.data(), sections.size(), gain,
                            cos_w.data(), sin_w.data(), re.data(), im.data(),
                            cos_w.size());
}

}  // namespace gef::kernels
