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

#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gef/characteristics.hpp"
#include "gef/design.hpp"
#include "gef/discretize.hpp"
#include "gef/error.hpp"
#include "gef/filterbank.hpp"
#include "gef/grid.hpp"
#include "gef/harness.hpp"
#include "gef/response.hpp"
#include "gef/serialize.hpp"
#include "gef/signal_io.hpp"

namespace gef::cli {
namespace {

using io::fmt;
using io::Json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
      return kExitIo;
    case ErrorKind::InfeasibleSpec:
    case ErrorKind::BracketFailure:
    case ErrorKind::ErbRequiresBu:
    case ErrorKind::ApproximationDomain:
    case ErrorKind::ExponentTooSmallForErb:
    case ErrorKind::NoInteriorPeak:
    case ErrorKind::LevelNotReached:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message,
                  int code) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  err << j.dump() << "\n";
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, path + ": cannot open for writing");
  out << text;
  if (!out) throw Error(ErrorKind::Io, path + ": write failed");
}

// Characteristic flags shared by design and bank.
struct TrioFlags {
  std::optional<double> peak_beta;
  std::optional<double> peak_hz;
  std::optional<double> gdelay;
  std::optional<double> phase;
  std::optional<double> qerb;
  std::optional<std::string> qn;
  std::optional<double> convexity;
  std::string mode = "exact";
  bool integer_snap = false;

  void attach(CLI::App* app) {
    auto* pb = app->add_option("--peak-beta", peak_beta, "normalized peak frequency")
                   ->check(CLI::PositiveNumber);
    auto* ph = app->add_option("--peak-hz", peak_hz,
                               "peak frequency in Hz; the trio is then read in normalized units")
                   ->check(CLI::PositiveNumber);
    pb->excludes(ph);
    app->add_option("--gdelay-cycles", gdelay, "group delay at the peak, cycles");
    app->add_option("--phase-accum", phase, "phase accumulation, cycles");
    app->add_option("--qerb", qerb, "ERB quality factor");
    app->add_option("--qn", qn, "n-dB quality factor as N:VALUE, e.g. 10:14.6");
    app->add_option("--convexity", convexity, "convexity S_beta at the peak, dB");
    app->add_option("--mode", mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
    app->add_flag("--integer-snap", integer_snap, "round B_u to an integer");
  }

  CharacteristicSpec spec() const {
    CharacteristicSpec s;
    s.beta_peak = peak_beta.value_or(1.0);
    s.mode = mode == "approx" ? SolveMode::approx : SolveMode::exact;
    s.integer_snap = integer_snap;
    const bool n = gdelay.has_value();
    const bool p = phase.has_value();
    const bool e = qerb.has_value();
    const bool q = qn.has_value();
    const bool c = convexity.has_value();
    const int count = n + p + e + q + c;
    if (count != 2) {
      throw Error(ErrorKind::InvalidSpec,
                  "give exactly two of --gdelay-cycles, --phase-accum, --qerb, --qn, --convexity");
    }
    if (n && p) s.row = DesignRow::PeakDelayPhase;
    else if (n && e) s.row = DesignRow::PeakDelayQerb;
    else if (e && p) s.row = DesignRow::PeakQerbPhase;
    else if (q && p) s.row = DesignRow::PeakQnPhase;
    else if (c && n) s.row = DesignRow::PeakConvexityDelay;
    else if (c && p) s.row = DesignRow::PeakConvexityPhase;
    else if (q && n) s.row = DesignRow::PeakQnDelay;
    else throw Error(ErrorKind::InvalidSpec, "this pair of characteristics does not determine a filter");

    if (n) s.values.emplace(std::string(kNCycles), *gdelay);
    if (p) s.values.emplace(std::string(kPhiAccum), *phase);
    if (e) s.values.emplace(std::string(kQerb), *qerb);
    if (c) s.values.emplace(std::string(kSBeta), *convexity);
    if (q) {
      const auto colon = qn->find(':');
      if (colon == std::string::npos) throw Error(ErrorKind::InvalidSpec, "--qn takes N:VALUE");
      try {
        s.n_level = std::stod(qn->substr(0, colon));
        s.values.emplace(std::string(kQn), std::stod(qn->substr(colon + 1)));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidSpec, "--qn takes N:VALUE with numbers");
      }
    }
    validate(s);
    return s;
  }
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidSpec, std::string("bad number in ") + what);
    }
  }
  return out;
}

FilterConstants parse_constants(const std::string& text) {
  const auto v = parse_list(text, "--constants");
  if (v.size() != 3 && v.size() != 4) {
    throw Error(ErrorKind::InvalidSpec, "--constants takes A_p,b_p,B_u[,C]");
  }
  return make_constants(v[0], v[1], v[2], v.size() == 4 ? v[3] : 1.0);
}

// Constants from --constants or from a constants, design or spec JSON file.
FilterConstants load_constants(const std::optional<std::string>& constants,
                               const std::optional<std::string>& in_path) {
  if (constants) return parse_constants(*constants);
  if (!in_path) throw Error(ErrorKind::InvalidSpec, "give --constants or --in");
  const Json j = io::parse_json(read_text(*in_path));
  if (j.contains("theta") || j.contains("a_p")) return io::constants_from_json(j);
  if (j.contains("row")) return design(io::spec_from_json(j)).theta;
  if (j.contains("spec")) return design(io::spec_from_json(j.at("spec"))).theta;
  throw Error(ErrorKind::InvalidSpec, *in_path + " holds neither constants nor a spec");
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "point counts must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

void print_theta(std::ostream& out, const FilterConstants& theta) {
  out << "A_p = " << fmt(theta.a_p()) << "\n"
      << "b_p = " << fmt(theta.b_p()) << "\n"
      << "B_u = " << fmt(theta.b_u()) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized-exponent bandpass filter design and analysis", "gef"};
  app.require_subcommand(1);

  // design
  TrioFlags design_flags;
  std::optional<std::string> design_out;
  auto* design_cmd = app.add_subcommand("design", "constants from a characteristic trio");
  design_flags.attach(design_cmd);
  design_cmd->add_option("--out", design_out, "write spec and constants JSON here");

  // analyze
  std::optional<std::string> an_constants, an_in, an_out;
  std::string an_format = "json";
  std::string an_levels = "3,10";
  auto* analyze_cmd = app.add_subcommand("analyze", "closed-form and numeric characteristics");
  analyze_cmd->add_option("--constants", an_constants, "A_p,b_p,B_u[,C]");
  analyze_cmd->add_option("--in", an_in, "constants, design or spec JSON");
  analyze_cmd->add_option("--levels", an_levels, "dB levels for Q_n, comma separated");
  analyze_cmd->add_option("--format", an_format)->check(CLI::IsMember({"json", "csv"}));
  analyze_cmd->add_option("--out", an_out, "output file (default stdout)");

  // evaluate
  std::optional<std::string> ev_constants, ev_in;
  std::string ev_format = "csv";
  std::string ev_out_dir;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "error tables for P_sharp, P and V");
  evaluate_cmd->add_option("--constants", ev_constants, "A_p,b_p,B_u[,C]");
  evaluate_cmd->add_option("--in", ev_in, "spec or constants JSON");
  evaluate_cmd->add_option("--format", ev_format)->check(CLI::IsMember({"json", "csv"}));
  evaluate_cmd->add_option("--out-dir", ev_out_dir, "directory for the tables")->required();

  // sweep
  std::optional<std::string> sw_qerb, sw_n;
  double sw_qmin = 10, sw_qmax = 30, sw_nmin = 15, sw_nmax = 22;
  int sw_qpts = 5, sw_npts = 5;
  std::string sw_out;
  std::string sw_format = "csv";
  auto* sweep_cmd = app.add_subcommand("sweep", "error surfaces over a (Q_erb, N) grid");
  sweep_cmd->add_option("--qerb-values", sw_qerb, "explicit Q_erb axis, comma separated");
  sweep_cmd->add_option("--n-values", sw_n, "explicit N axis, comma separated");
  sweep_cmd->add_option("--qerb-min", sw_qmin);
  sweep_cmd->add_option("--qerb-max", sw_qmax);
  sweep_cmd->add_option("--qerb-points", sw_qpts);
  sweep_cmd->add_option("--n-min", sw_nmin);
  sweep_cmd->add_option("--n-max", sw_nmax);
  sweep_cmd->add_option("--n-points", sw_npts);
  sweep_cmd->add_option("--format", sw_format)->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--out", sw_out)->required();

  // bank
  TrioFlags bank_flags;
  double bk_cf0 = 0, bk_l = 0, bk_xmax = 0;
  int bk_channels = 0;
  std::string bk_out;
  auto* bank_cmd = app.add_subcommand("bank", "constant-Q filterbank over a CF map");
  bank_flags.attach(bank_cmd);
  bank_cmd->add_option("--cf0", bk_cf0, "CF at x = 0, Hz")->required();
  bank_cmd->add_option("--l", bk_l, "space constant")->required();
  bank_cmd->add_option("--x-max", bk_xmax, "end of the place range")->required();
  bank_cmd->add_option("--channels", bk_channels, "channel count")->required()->check(CLI::NonNegativeNumber);
  bank_cmd->add_option("--out", bk_out)->required();

  // discretize
  std::optional<std::string> ds_constants, ds_in;
  double ds_peak = 0, ds_fs = 0;
  std::string ds_out;
  auto* disc_cmd = app.add_subcommand("discretize", "second-order sections by bilinear transform");
  disc_cmd->add_option("--constants", ds_constants, "A_p,b_p,B_u[,C]");
  disc_cmd->add_option("--in", ds_in, "constants, design or spec JSON");
  disc_cmd->add_option("--peak-hz", ds_peak)->required();
  disc_cmd->add_option("--fs", ds_fs)->required();
  disc_cmd->add_option("--out", ds_out)->required();

  // filter
  std::optional<std::string> fl_sos, fl_constants, fl_theta_in;
  std::string fl_in, fl_out;
  double fl_fs = 0, fl_peak = 0;
  bool fl_fft = false;
  auto* filter_cmd = app.add_subcommand("filter", "filter a WAV or CSV signal");
  filter_cmd->add_option("--sos", fl_sos, "SOS JSON from discretize");
  filter_cmd->add_flag("--fft", fl_fft, "apply the analog response in the frequency domain");
  filter_cmd->add_option("--constants", fl_constants, "A_p,b_p,B_u[,C] for --fft");
  filter_cmd->add_option("--theta-in", fl_theta_in, "constants JSON for --fft");
  filter_cmd->add_option("--peak-hz", fl_peak, "peak frequency for --fft");
  filter_cmd->add_option("--fs", fl_fs, "sample rate of CSV input");
  filter_cmd->add_option("--in", fl_in)->required();
  filter_cmd->add_option("--out", fl_out)->required();

  // response
  std::optional<std::string> rs_constants, rs_in, rs_sos, rs_bank;
  double rs_peak = 0, rs_fmin = 0, rs_fmax = 0;
  int rs_points = 0;
  std::string rs_out;
  auto* response_cmd = app.add_subcommand("response", "frequency response table");
  response_cmd->add_option("--constants", rs_constants, "A_p,b_p,B_u[,C]");
  response_cmd->add_option("--in", rs_in, "constants, design or spec JSON");
  response_cmd->add_option("--sos", rs_sos, "SOS JSON");
  response_cmd->add_option("--bank", rs_bank, "bank JSON");
  response_cmd->add_option("--peak-hz", rs_peak, "peak frequency for constants input");
  response_cmd->add_option("--fmin", rs_fmin)->required();
  response_cmd->add_option("--fmax", rs_fmax)->required();
  response_cmd->add_option("--points", rs_points)->required();
  response_cmd->add_option("--out", rs_out)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    report_error(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (*design_cmd) {
      const auto spec = design_flags.spec();
      const auto result = design(spec);
      print_theta(out, result.theta);
      if (design_flags.peak_hz) out << "f_peak = " << fmt(*design_flags.peak_hz) << " Hz\n";
      for (const auto& w : result.warnings) out << "warning: " << w << "\n";
      if (design_out) {
        Json j;
        j["spec"] = io::to_json(spec);
        const Json d = io::to_json(result);
        for (const auto& [k, v] : d.items()) j[k] = v;
        if (design_flags.peak_hz) j["f_peak"] = round_sig13(*design_flags.peak_hz);
        write_text(*design_out, io::dump(j));
      }
    } else if (*analyze_cmd) {
      const auto theta = load_constants(an_constants, an_in);
      const auto levels = parse_list(an_levels, "--levels");
      const auto closed = closed_form(theta, levels);
      const auto numeric = extract_numeric(
          [&theta](double b) { return eval_gef(theta, b); }, default_grid(theta), levels);
      std::string text;
      if (an_format == "json") {
        Json j;
        j["theta"] = io::to_json(theta);
        j["closed_form"] = io::to_json(closed);
        j["numeric"] = io::to_json(numeric);
        text = io::dump(j);
      } else {
        text = "characteristic,closed_form,numeric\n";
        const auto c = closed.values();
        const auto n = numeric.values();
        for (const auto& [k, v] : c) {
          const auto it = n.find(k);
          text += k + "," + fmt(v) + "," + (it == n.end() ? std::string("null") : fmt(it->second)) + "\n";
        }
      }
      if (an_out) write_text(*an_out, text);
      else out << text;
    } else if (*evaluate_cmd) {
      CharacteristicSpec spec;
      if (ev_in && !ev_constants) {
        const Json j = io::parse_json(read_text(*ev_in));
        if (j.contains("row")) spec = io::spec_from_json(j);
        else if (j.contains("spec")) spec = io::spec_from_json(j.at("spec"));
        else spec = CharacteristicSpec::from_constants(DesignRow::PeakDelayPhase, io::constants_from_json(j));
      } else {
        spec = CharacteristicSpec::from_constants(DesignRow::PeakDelayPhase,
                                                  load_constants(ev_constants, ev_in));
      }
      const auto rep = figure_report(spec);
      const std::string dir = ev_out_dir.empty() ? "." : ev_out_dir;
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw Error(ErrorKind::Io, dir + ": " + ec.message());
      if (ev_format == "csv") {
        write_text(dir + "/response.csv", io::response_csv(rep.response));
        write_text(dir + "/errors.csv", io::errors_csv(rep.errors));
      } else {
        write_text(dir + "/report.json", io::dump(io::to_json(rep)));
      }
      print_theta(out, rep.theta);
      const auto records = evaluate_constants(rep.theta);
      for (const auto& [k, better] : v_not_worse_than_p(records)) {
        out << "|eps_V| <= |eps_P| for " << k << ": " << (better ? "yes" : "no") << "\n";
      }
    } else if (*sweep_cmd) {
      const auto q = sw_qerb ? parse_list(*sw_qerb, "--qerb-values") : linspace(sw_qmin, sw_qmax, sw_qpts);
      const auto n = sw_n ? parse_list(*sw_n, "--n-values") : linspace(sw_nmin, sw_nmax, sw_npts);
      for (double v : q) if (!(v > 0)) throw Error(ErrorKind::InvalidSpec, "Q_erb values must be positive");
      for (double v : n) if (!(v > 0)) throw Error(ErrorKind::InvalidSpec, "N values must be positive");
      const auto res = sweep(q, n);
      write_text(sw_out, sw_format == "csv" ? io::sweep_csv(res) : io::dump(io::to_json(res)));
      std::size_t failed = 0;
      for (const auto& row : res.failures) failed += std::count_if(row.begin(), row.end(), [](const auto& f) { return !f.empty(); });
      out << q.size() * n.size() << " cells, " << failed << " infeasible\n";
    } else if (*bank_cmd) {
      if (bank_flags.peak_hz) throw Error(ErrorKind::InvalidSpec, "bank channels take their peaks from the CF map");
      const CfMap map{bk_cf0, bk_l, bk_xmax};
      const auto spec = bank_flags.spec();
      const auto xs = uniform_positions(map, static_cast<std::size_t>(bk_channels));
      const auto bank = build_constant_q_bank(map, xs, spec);
      write_text(bk_out, io::dump(io::bank_to_json(map, bank)));
      out << bank.size() << " channels\n";
    } else if (*disc_cmd) {
      const auto theta = load_constants(ds_constants, ds_in);
      const auto filt = to_sos(theta, ds_peak, ds_fs);
      write_text(ds_out, io::dump(io::to_json(filt)));
      double rmax = 0.0;
      for (const auto& z : digital_poles(filt)) rmax = std::max(rmax, std::abs(z));
      out << filt.sections.size() << " sections, max |pole| = " << fmt(rmax) << "\n";
    } else if (*filter_cmd) {
      SignalBuffer result;
      if (fl_fft) {
        if (fl_sos) throw Error(ErrorKind::InvalidSpec, "--fft and --sos are exclusive");
        if (!(fl_fs > 0)) throw Error(ErrorKind::InvalidSpec, "--fft needs --fs");
        const auto theta = load_constants(fl_constants, fl_theta_in);
        auto sig = read_signal(fl_in, fl_fs);
        if (sig.sample_rate != fl_fs) throw Error(ErrorKind::SampleRateMismatch, "input rate differs from --fs");
        result = apply_fft(normalize_to_peak(theta), fl_peak, fl_fs, sig);
      } else {
        if (!fl_sos) throw Error(ErrorKind::InvalidSpec, "give --sos or --fft");
        const auto filt = io::filter_from_json(io::parse_json(read_text(*fl_sos)));
        auto sig = read_signal(fl_in, fl_fs > 0 ? fl_fs : filt.sample_rate);
        result = apply_sos(filt, sig);
      }
      write_signal(fl_out, result);
      out << result.samples.size() << " samples\n";
    } else if (*response_cmd) {
      if (rs_points < 1) throw Error(ErrorKind::InvalidSpec, "--points must be >= 1");
      if (!(rs_fmin >= 0) || !(rs_fmax >= rs_fmin)) throw Error(ErrorKind::InvalidSpec, "need 0 <= fmin <= fmax");
      const auto f = linspace(rs_fmin, rs_fmax, rs_points);
      std::vector<io::ResponseSample> samples;
      if (rs_sos) {
        const auto filt = io::filter_from_json(io::parse_json(read_text(*rs_sos)));
        const auto h = digital_response(filt, f);
        for (std::size_t i = 0; i < f.size(); ++i) samples.push_back({f[i], h[i], 0});
      } else if (rs_bank) {
        const Json j = io::parse_json(read_text(*rs_bank));
        int id = 0;
        for (const auto& c : j.at("channels")) {
          const BankChannel ch{c.at("x").get<double>(), c.at("f_peak").get<double>(),
                               io::constants_from_json(c.at("theta")), c.at("gain").get<double>()};
          for (double fi : f) samples.push_back({fi, channel_response(ch, fi), id});
          ++id;
        }
      } else {
        if (!(rs_peak > 0)) throw Error(ErrorKind::InvalidSpec, "constants input needs --peak-hz");
        const auto theta = load_constants(rs_constants, rs_in);
        for (double fi : f) samples.push_back({fi, eval_gef(theta, fi / rs_peak), 0});
      }
      write_text(rs_out, io::response_samples_csv(samples));
      out << samples.size() << " rows\n";
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report_error(err, to_string(e.kind()), e.what(), code);
    return code;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "InvalidSpec", e.what(), kExitUsage);
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace gef::cli
