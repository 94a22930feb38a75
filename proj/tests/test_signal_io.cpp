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

#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>

#include "gef/error.hpp"
#include "gef/signal_io.hpp"

using namespace gef;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "gef_signal_io_test";
  fs::create_directories(dir);
  return dir / name;
}

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

}  // namespace

TEST(Wav, FloatRoundTrip) {
  SignalBuffer s{48000.0, {0.0, 0.5, -0.25, 1.0, -1.0, 0.125}};
  const auto p = temp_path("rt.wav");
  write_wav(p, s);
  const auto r = read_wav(p);
  EXPECT_EQ(r.sample_rate, 48000.0);
  EXPECT_EQ(r.samples, s.samples);
}

TEST(Wav, Pcm16) {
  const auto p = temp_path("pcm.wav");
  {
    std::ofstream out(p, std::ios::binary);
    const std::int16_t data[] = {0, 16384, -32768, 32767};
    out.write("RIFF", 4);
    put<std::uint32_t>(out, 36 + sizeof data);
    out.write("WAVEfmt ", 8);
    put<std::uint32_t>(out, 16);
    put<std::uint16_t>(out, 1);
    put<std::uint16_t>(out, 1);
    put<std::uint32_t>(out, 8000);
    put<std::uint32_t>(out, 16000);
    put<std::uint16_t>(out, 2);
    put<std::uint16_t>(out, 16);
    out.write("data", 4);
    put<std::uint32_t>(out, sizeof data);
    out.write(reinterpret_cast<const char*>(data), sizeof data);
  }
  const auto r = read_wav(p);
  EXPECT_EQ(r.sample_rate, 8000.0);
  ASSERT_EQ(r.samples.size(), 4u);
  EXPECT_DOUBLE_EQ(r.samples[1], 0.5);
  EXPECT_DOUBLE_EQ(r.samples[2], -1.0);
}

TEST(Wav, RejectsGarbage) {
  const auto p = temp_path("bad.wav");
  {
    std::ofstream out(p, std::ios::binary);
    out << "not a wave file at all";
  }
  try {
    read_wav(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
  EXPECT_THROW(read_wav(temp_path("missing.wav")), Error);
}

TEST(Csv, RoundTripAndDispatch) {
  SignalBuffer s{16000.0, {0.1, -2.5e-7, 3.0}};
  const auto p = temp_path("sig.csv");
  write_signal(p, s);
  const auto r = read_signal(p, 16000.0);
  EXPECT_EQ(r.sample_rate, 16000.0);
  ASSERT_EQ(r.samples.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.samples[i], s.samples[i], 1e-12 * std::abs(s.samples[i]));
  EXPECT_THROW(write_signal(temp_path("sig.txt"), s), Error);
}
