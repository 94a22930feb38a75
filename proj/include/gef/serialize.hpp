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

#include <string>
#include <vector>

#include "gef/characteristics.hpp"
#include "gef/constants.hpp"
#include "gef/design.hpp"
#include "gef/discretize.hpp"
#include "gef/filterbank.hpp"
#include "gef/harness.hpp"
#include "json.hpp"

namespace gef::io {

using Json = nlohmann::ordered_json;

/// "%.12e" rendering used for every float in text output.
std::string fmt(double x);

// JSON. Parsers throw Error{InvalidSpec} on missing or mistyped fields.

Json to_json(const FilterConstants& theta);
FilterConstants constants_from_json(const Json& j);

Json to_json(const CharacteristicSpec& spec);
CharacteristicSpec spec_from_json(const Json& j);

Json to_json(const CharacteristicReport& report);

Json to_json(const DesignResult& result);

Json to_json(const DigitalFilter& filt);
DigitalFilter filter_from_json(const Json& j);

Json to_json(const CfMap& map);
CfMap cf_map_from_json(const Json& j);
Json bank_to_json(const CfMap& map, const std::vector<BankChannel>& bank);

Json to_json(const MultibandSpec& spec);
MultibandSpec multiband_from_json(const Json& j);

Json to_json(const ErrorRecord& rec);
Json to_json(const SweepResult& res);
Json to_json(const FigureReport& rep);

/// Parse text as JSON; Error{Io} with the parser message on failure.
Json parse_json(const std::string& text);
/// Rounded, stable dump (two-space indent, trailing newline).
std::string dump(const Json& j);

// CSV, always with a header row.

/// characteristic,value
std::string report_csv(const CharacteristicReport& report);

/// q_erb,n_cycles,a_p,b_u,<characteristic errors...>; infeasible cells
/// carry "null" in every column after the axes.
std::string sweep_csv(const SweepResult& res);

std::string response_csv(const std::vector<ResponseRow>& rows);
std::vector<ResponseRow> parse_response_csv(const std::string& text);

std::string errors_csv(const std::vector<ErrorRow>& rows);
std::vector<ErrorRow> parse_errors_csv(const std::string& text);

/// One exported frequency-response sample.
struct ResponseSample {
  double f_hz;
  Complex h;
  int channel_id;
};

/// f_hz,re,im,level_db,phase_rad,channel_id; the phase is unwrapped per channel.
std::string response_samples_csv(const std::vector<ResponseSample>& samples);

}  // namespace gef::io
