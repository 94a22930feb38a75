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

#include "gef/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gef/error.hpp"

namespace gef::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

Json num(double x) { return Json(round_sig13(x)); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("JSON lacks field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) bad(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> parse_table(const std::string& text,
                                                  std::size_t columns) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cells = split(line);
    if (cells.size() != columns) bad("CSV row has " + std::to_string(cells.size()) + " columns");
    rows.push_back(std::move(cells));
  }
  return rows;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad("bad number '" + s + "' in CSV");
  }
  if (used != s.size()) bad("bad number '" + s + "' in CSV");
  return v;
}

std::string_view method_name(Method m) {
  return m == Method::closed_form ? "closed_form" : "numeric";
}

}  // namespace

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

Json to_json(const FilterConstants& theta) {
  Json j;
  j["a_p"] = num(theta.a_p());
  j["b_p"] = num(theta.b_p());
  j["b_u"] = num(theta.b_u());
  j["gain"] = num(theta.gain());
  return j;
}

FilterConstants constants_from_json(const Json& j) {
  const Json& t = j.contains("theta") ? j.at("theta") : j;
  return make_constants(number(t, "a_p"), number(t, "b_p"), number(t, "b_u"),
                        number_or(t, "gain", 1.0));
}

Json to_json(const CharacteristicSpec& spec) {
  Json j;
  j["row"] = row_label(spec.row);
  j["beta_peak"] = num(spec.beta_peak);
  for (const auto& [k, v] : spec.values) j[k] = num(v);
  if (spec.n_level) j["n_level"] = num(*spec.n_level);
  j["mode"] = spec.mode == SolveMode::exact ? "exact" : "approx";
  j["integer_snap"] = spec.integer_snap;
  return j;
}

CharacteristicSpec spec_from_json(const Json& j) {
  CharacteristicSpec spec;
  const Json& row = field(j, "row");
  if (!row.is_string()) bad("'row' must be a string such as \"II.2\"");
  spec.row = parse_row(row.get<std::string>());
  spec.beta_peak = number_or(j, "beta_peak", 1.0);
  const std::string_view value_keys[] = {kNCycles, kPhiAccum, kQerb, kQn, kSBeta};
  for (const auto& [k, v] : j.items()) {
    if (k == "row" || k == "beta_peak" || k == "n_level" || k == "mode" || k == "integer_snap") {
      continue;
    }
    if (std::find(std::begin(value_keys), std::end(value_keys), k) == std::end(value_keys)) {
      bad("unknown spec field '" + k + "'");
    }
    if (!v.is_number()) bad("value '" + k + "' must be a number");
    spec.values.emplace(k, v.get<double>());
  }
  if (j.contains("n_level")) spec.n_level = number(j, "n_level");
  if (j.contains("mode")) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "exact") {
      spec.mode = SolveMode::exact;
    } else if (mode == "approx") {
      spec.mode = SolveMode::approx;
    } else {
      bad("mode must be exact or approx");
    }
  }
  if (j.contains("integer_snap")) spec.integer_snap = j.at("integer_snap").get<bool>();
  validate(spec);
  return spec;
}

Json to_json(const CharacteristicReport& r) {
  Json j;
  j["method"] = method_name(r.method);
  j["beta_peak"] = num(r.beta_peak);
  j["n_beta"] = num(r.n_beta);
  j["phi_accum"] = num(r.phi_accum);
  j["q_erb"] = r.q_erb ? num(*r.q_erb) : Json(nullptr);
  j["erb_beta"] = r.erb_beta ? num(*r.erb_beta) : Json(nullptr);
  Json qn = Json::object();
  Json bw = Json::object();
  for (const auto& [n, q] : r.q_n) qn[level_key(n)] = num(q);
  for (const auto& [n, b] : r.bw_n_beta) bw[level_key(n)] = num(b);
  j["q_n"] = qn;
  j["bw_n_beta"] = bw;
  j["s_beta"] = num(r.s_beta);
  j["erb_omitted"] = r.erb_omitted;
  if (r.grid) {
    j["grid"] = {{"beta_min", num(r.grid->beta_min)},
                 {"tail_max", num(r.grid->tail_max)},
                 {"dense_halfwidth", num(r.grid->dense_halfwidth)},
                 {"dense_step", num(r.grid->dense_step)},
                 {"samples", r.grid->samples},
                 {"tail_points", r.grid->tail_points}};
  }
  return j;
}

Json to_json(const DesignResult& result) {
  Json j;
  j["theta"] = to_json(result.theta);
  j["sharpness"] = {{"a_p", num(result.sharpness.a_p)},
                    {"alpha_at_peak", num(result.sharpness.alpha_at_peak)},
                    {"satisfied", result.sharpness.satisfied}};
  j["warnings"] = result.warnings;
  if (result.alternate_a_p) j["alternate_a_p"] = num(*result.alternate_a_p);
  j["solver_iterations"] = result.solver_iterations;
  return j;
}

Json to_json(const DigitalFilter& filt) {
  Json j;
  j["fs"] = num(filt.sample_rate);
  j["gain"] = num(filt.gain);
  Json sos = Json::array();
  for (const auto& q : filt.sections) {
    sos.push_back({num(q.b0), num(q.b1), num(q.b2), num(q.a1), num(q.a2)});
  }
  j["sos"] = sos;
  if (filt.f_peak) j["f_peak"] = num(*filt.f_peak);
  if (filt.source_theta) j["theta"] = to_json(*filt.source_theta);
  return j;
}

DigitalFilter filter_from_json(const Json& j) {
  DigitalFilter filt;
  filt.sample_rate = number(j, "fs");
  if (!(filt.sample_rate > 0.0)) bad("fs must be positive");
  filt.gain = number_or(j, "gain", 1.0);
  const Json& sos = field(j, "sos");
  if (!sos.is_array()) bad("'sos' must be an array");
  for (const auto& row : sos) {
    if (!row.is_array() || row.size() != 5) bad("each section needs [b0,b1,b2,a1,a2]");
    std::array<double, 5> c{};
    for (std::size_t i = 0; i < 5; ++i) {
      if (!row[i].is_number()) bad("section coefficients must be numbers");
      c[i] = row[i].get<double>();
      if (!std::isfinite(c[i])) bad("section coefficients must be finite");
    }
    filt.sections.push_back({c[0], c[1], c[2], c[3], c[4]});
  }
  if (j.contains("f_peak")) filt.f_peak = number(j, "f_peak");
  if (j.contains("theta")) filt.source_theta = constants_from_json(j.at("theta"));
  return filt;
}

Json to_json(const CfMap& map) {
  return {{"cf0", num(map.cf0)}, {"l", num(map.l)}, {"x_max", num(map.x_max)}};
}

CfMap cf_map_from_json(const Json& j) {
  CfMap map{number(j, "cf0"), number(j, "l"), number(j, "x_max")};
  validate(map);
  return map;
}

Json bank_to_json(const CfMap& map, const std::vector<BankChannel>& bank) {
  Json j;
  j["cf_map"] = to_json(map);
  Json channels = Json::array();
  for (const auto& c : bank) {
    channels.push_back({{"x", num(c.x)},
                        {"f_peak", num(c.f_peak)},
                        {"theta", to_json(c.theta)},
                        {"gain", num(c.gain)}});
  }
  j["channels"] = channels;
  return j;
}

Json to_json(const MultibandSpec& spec) {
  Json bands = Json::array();
  for (const auto& b : spec.bands) {
    bands.push_back({{"f_peak_hz", num(b.f_peak_hz)}, {"spec", to_json(b.spec)},
                     {"gain", num(b.gain)}});
  }
  return {{"bands", bands}};
}

MultibandSpec multiband_from_json(const Json& j) {
  MultibandSpec spec;
  const Json& bands = field(j, "bands");
  if (!bands.is_array()) bad("'bands' must be an array");
  for (const auto& b : bands) {
    spec.bands.push_back({number(b, "f_peak_hz"), spec_from_json(field(b, "spec")),
                          number_or(b, "gain", 1.0)});
  }
  validate(spec);
  return spec;
}

Json to_json(const ErrorRecord& rec) {
  Json j;
  j["target"] = to_string(rec.target);
  j["desired"] = to_json(rec.desired);
  j["achieved"] = to_json(rec.achieved);
  Json errors = Json::object();
  for (const auto& [k, v] : rec.errors) errors[k] = num(v);
  j["errors"] = errors;
  return j;
}

Json to_json(const SweepResult& res) {
  Json j;
  Json qa = Json::array();
  Json na = Json::array();
  for (double q : res.q_erb_axis) qa.push_back(num(q));
  for (double n : res.n_axis) na.push_back(num(n));
  j["q_erb_axis"] = qa;
  j["n_axis"] = na;
  Json grids = Json::object();
  for (const auto& [key, grid] : res.error_grids) {
    Json rows = Json::array();
    for (const auto& row : grid) {
      Json cells = Json::array();
      for (const auto& cell : row) cells.push_back(cell ? num(*cell) : Json(nullptr));
      rows.push_back(cells);
    }
    grids[key] = rows;
  }
  j["error_grids"] = grids;
  Json failures = Json::array();
  for (const auto& row : res.failures) {
    Json cells = Json::array();
    for (const auto& f : row) cells.push_back(f.empty() ? Json(nullptr) : Json(f));
    failures.push_back(cells);
  }
  j["failures"] = failures;
  return j;
}

Json to_json(const FigureReport& rep) {
  Json j;
  j["theta"] = to_json(rep.theta);
  Json resp = Json::array();
  for (const auto& r : rep.response) {
    resp.push_back({{"beta", r.beta},
                    {"p_sharp_level_db", r.p_sharp_level_db},
                    {"p_sharp_phase_rad", r.p_sharp_phase_rad},
                    {"p_level_db", r.p_level_db},
                    {"p_phase_rad", r.p_phase_rad},
                    {"v_level_db", r.v_level_db},
                    {"v_phase_rad", r.v_phase_rad}});
  }
  j["response"] = resp;
  Json errs = Json::array();
  for (const auto& e : rep.errors) {
    errs.push_back({{"target", e.target},
                    {"characteristic", e.characteristic},
                    {"desired", e.desired},
                    {"achieved", e.achieved},
                    {"error", e.error}});
  }
  j["errors"] = errs;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Io, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string report_csv(const CharacteristicReport& report) {
  std::string out = "characteristic,value\n";
  for (const auto& [k, v] : report.values()) out += k + "," + fmt(v) + "\n";
  return out;
}

std::string sweep_csv(const SweepResult& res) {
  std::string out = "q_erb,n_cycles,a_p,b_u";
  for (const auto& [key, grid] : res.error_grids) out += "," + key;
  out += "\n";
  for (std::size_t i = 0; i < res.q_erb_axis.size(); ++i) {
    for (std::size_t j = 0; j < res.n_axis.size(); ++j) {
      out += fmt(res.q_erb_axis[i]) + "," + fmt(res.n_axis[j]);
      const auto& theta = res.designs[i][j];
      out += theta ? "," + fmt(theta->a_p()) + "," + fmt(theta->b_u()) : ",null,null";
      for (const auto& [key, grid] : res.error_grids) {
        out += "," + (grid[i][j] ? fmt(*grid[i][j]) : std::string("null"));
      }
      out += "\n";
    }
  }
  return out;
}

std::string response_csv(const std::vector<ResponseRow>& rows) {
  std::string out =
      "beta,p_sharp_level_db,p_sharp_phase_rad,p_level_db,p_phase_rad,v_level_db,v_phase_rad\n";
  for (const auto& r : rows) {
    out += fmt(r.beta) + "," + fmt(r.p_sharp_level_db) + "," + fmt(r.p_sharp_phase_rad) + "," +
           fmt(r.p_level_db) + "," + fmt(r.p_phase_rad) + "," + fmt(r.v_level_db) + "," +
           fmt(r.v_phase_rad) + "\n";
  }
  return out;
}

std::vector<ResponseRow> parse_response_csv(const std::string& text) {
  std::vector<ResponseRow> rows;
  for (const auto& c : parse_table(text, 7)) {
    rows.push_back({to_double(c[0]), to_double(c[1]), to_double(c[2]), to_double(c[3]),
                    to_double(c[4]), to_double(c[5]), to_double(c[6])});
  }
  return rows;
}

std::string errors_csv(const std::vector<ErrorRow>& rows) {
  std::string out = "target,characteristic,desired,achieved,error\n";
  for (const auto& r : rows) {
    out += r.target + "," + r.characteristic + "," + fmt(r.desired) + "," + fmt(r.achieved) +
           "," + fmt(r.error) + "\n";
  }
  return out;
}

std::vector<ErrorRow> parse_errors_csv(const std::string& text) {
  std::vector<ErrorRow> rows;
  for (const auto& c : parse_table(text, 5)) {
    rows.push_back({c[0], c[1], to_double(c[2]), to_double(c[3]), to_double(c[4])});
  }
  return rows;
}

std::string response_samples_csv(const std::vector<ResponseSample>& samples) {
  std::string out = "f_hz,re,im,level_db,phase_rad,channel_id\n";
  std::map<int, double> prev;
  for (const auto& s : samples) {
    double ph = std::arg(s.h);
    const auto it = prev.find(s.channel_id);
    if (it != prev.end()) {
      ph += 2.0 * std::numbers::pi * std::round((it->second - ph) / (2.0 * std::numbers::pi));
    }
    prev[s.channel_id] = ph;
    out += fmt(s.f_hz) + "," + fmt(s.h.real()) + "," + fmt(s.h.imag()) + "," +
           fmt(20.0 * std::log10(std::abs(s.h))) + "," + fmt(ph) + "," +
           std::to_string(s.channel_id) + "\n";
  }
  return out;
}

}  // namespace gef::io
