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

#include "gef/signal_io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gef/error.hpp"

namespace gef {
namespace {

static_assert(std::endian::native == std::endian::little, "WAV I/O assumes little endian");

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

[[noreturn]] void io_error(const std::filesystem::path& path, const std::string& what) {
  throw Error(ErrorKind::Io, path.string() + ": " + what);
}

template <typename T>
T load(const std::vector<char>& bytes, std::size_t at) {
  T v;
  std::memcpy(&v, bytes.data() + at, sizeof(T));
  return v;
}

template <typename T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

std::string lower_ext(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

}  // namespace

SignalBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error(path, "cannot open");
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    io_error(path, "not a RIFF/WAVE file");
  }
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  std::size_t data_at = 0, data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t size = load<std::uint32_t>(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size()) io_error(path, "truncated chunk");
    if (std::memcmp(bytes.data() + pos, "fmt ", 4) == 0) {
      if (size < 16) io_error(path, "short fmt chunk");
      format = load<std::uint16_t>(bytes, body);
      channels = load<std::uint16_t>(bytes, body + 2);
      rate = load<std::uint32_t>(bytes, body + 4);
      bits = load<std::uint16_t>(bytes, body + 14);
      if (format == kFormatExtensible && size >= 26) format = load<std::uint16_t>(bytes, body + 24);
      have_fmt = true;
    } else if (std::memcmp(bytes.data() + pos, "data", 4) == 0) {
      data_at = body;
      data_size = size;
    }
    pos = body + size + (size & 1u);
  }
  if (!have_fmt || data_at == 0) io_error(path, "missing fmt or data chunk");
  if (channels != 1) io_error(path, "only mono files are supported");
  if (rate == 0) io_error(path, "zero sample rate");

  SignalBuffer sig;
  sig.sample_rate = rate;
  if (format == kFormatFloat && bits == 32) {
    sig.samples.resize(data_size / 4);
    for (std::size_t i = 0; i < sig.samples.size(); ++i) {
      sig.samples[i] = load<float>(bytes, data_at + 4 * i);
    }
  } else if (format == kFormatPcm && bits == 16) {
    sig.samples.resize(data_size / 2);
    for (std::size_t i = 0; i < sig.samples.size(); ++i) {
      sig.samples[i] = load<std::int16_t>(bytes, data_at + 2 * i) / 32768.0;
    }
  } else {
    io_error(path, "unsupported sample format (need float32 or pcm16)");
  }
  return sig;
}

void write_wav(const std::filesystem::path& path, const SignalBuffer& signal) {
  if (!(signal.sample_rate > 0.0)) io_error(path, "sample rate must be positive");
  std::ofstream out(path, std::ios::binary);
  if (!out) io_error(path, "cannot open for writing");
  const auto n = static_cast<std::uint32_t>(signal.samples.size());
  const auto rate = static_cast<std::uint32_t>(std::llround(signal.sample_rate));
  out.write("RIFF", 4);
  put<std::uint32_t>(out, 36 + 4 * n);
  out.write("WAVEfmt ", 8);
  put<std::uint32_t>(out, 16);
  put<std::uint16_t>(out, kFormatFloat);
  put<std::uint16_t>(out, 1);
  put<std::uint32_t>(out, rate);
  put<std::uint32_t>(out, 4 * rate);
  put<std::uint16_t>(out, 4);
  put<std::uint16_t>(out, 32);
  out.write("data", 4);
  put<std::uint32_t>(out, 4 * n);
  for (double v : signal.samples) put<float>(out, static_cast<float>(v));
  if (!out) io_error(path, "write failed");
}

SignalBuffer read_csv(const std::filesystem::path& path, double sample_rate) {
  std::ifstream in(path);
  if (!in) io_error(path, "cannot open");
  SignalBuffer sig;
  sig.sample_rate = sample_rate;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(line, &used);
      if (line.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
      sig.samples.push_back(v);
    } catch (const std::exception&) {
      io_error(path, "bad sample on line " + std::to_string(lineno));
    }
  }
  return sig;
}

void write_csv(const std::filesystem::path& path, const SignalBuffer& signal) {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (f == nullptr) io_error(path, "cannot open for writing");
  for (double v : signal.samples) std::fprintf(f, "%.12e\n", v);
  if (std::fclose(f) != 0) io_error(path, "write failed");
}

SignalBuffer read_signal(const std::filesystem::path& path, double csv_sample_rate) {
  const auto ext = lower_ext(path);
  if (ext == ".wav") return read_wav(path);
  if (ext == ".csv") return read_csv(path, csv_sample_rate);
  io_error(path, "unknown signal extension (use .wav or .csv)");
}

void write_signal(const std::filesystem::path& path, const SignalBuffer& signal) {
  const auto ext = lower_ext(path);
  if (ext == ".wav") return write_wav(path, signal);
  if (ext == ".csv") return write_csv(path, signal);
  io_error(path, "unknown signal extension (use .wav or .csv)");
}

}  // namespace gef
