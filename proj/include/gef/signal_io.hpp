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

#include <filesystem>

#include "gef/discretize.hpp"

namespace gef {

/// Mono RIFF/WAVE, 32-bit IEEE float or 16-bit PCM. Error{Io} on anything else.
SignalBuffer read_wav(const std::filesystem::path& path);
/// Mono 32-bit float WAV; the sample rate is rounded to an integer.
void write_wav(const std::filesystem::path& path, const SignalBuffer& signal);

/// Headerless CSV, one sample per line; the rate is not stored in the file.
SignalBuffer read_csv(const std::filesystem::path& path, double sample_rate);
void write_csv(const std::filesystem::path& path, const SignalBuffer& signal);

/// Dispatch on extension (.wav or .csv).
SignalBuffer read_signal(const std::filesystem::path& path, double csv_sample_rate);
void write_signal(const std::filesystem::path& path, const SignalBuffer& signal);

}  // namespace gef
