// Copyright 2026 The serkit authors
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

#include "serkit/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ser {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error("wav: " + path.string() + ": " + what);
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

}  // namespace

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    fail(path, "not a RIFF/WAVE file");
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_len = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* tag = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_len = read_u32(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) fail(path, "truncated chunk");
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_len < 16) fail(path, "fmt chunk too short");
      format = read_u16(bytes.data() + body);
      channels = read_u16(bytes.data() + body + 2);
      sample_rate = read_u32(bytes.data() + body + 4);
      bits = read_u16(bytes.data() + body + 14);
      if (format == kFormatExtensible && chunk_len >= 40) {
        // Sub-format GUID starts with the effective format code.
        format = read_u16(bytes.data() + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data = bytes.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt) fail(path, "missing fmt chunk");
  if (data == nullptr) fail(path, "missing data chunk");
  if (data_len == 0) fail(path, "zero-length data chunk");
  if (channels < 1 || channels > 2) fail(path, "unsupported channel count " + std::to_string(channels));
  if (sample_rate == 0) fail(path, "zero sample rate");

  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool pcm24 = format == kFormatPcm && bits == 24;
  const bool f32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !pcm24 && !f32) {
    fail(path, "unsupported codec (format " + std::to_string(format) + ", " +
                   std::to_string(bits) + " bits)");
  }

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t stride = bytes_per_sample * channels;
  const std::size_t n_frames = data_len / stride;
  if (n_frames == 0) fail(path, "zero-length data chunk");

  Waveform w;
  w.sample_rate = static_cast<int>(sample_rate);
  w.samples.resize(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const unsigned char* p = data + i * stride + c * bytes_per_sample;
      double v = 0.0;
      if (pcm16) {
        const auto raw = static_cast<std::int16_t>(p[0] | p[1] << 8);
        v = static_cast<double>(raw) / 32768.0;
      } else if (pcm24) {
        std::int32_t raw = p[0] | p[1] << 8 | p[2] << 16;
        if (raw & 0x800000) raw |= ~0xFFFFFF;  // sign-extend
        v = static_cast<double>(raw) / 8388608.0;
      } else {
        float f;
        std::memcpy(&f, p, 4);
        v = static_cast<double>(f);
      }
      acc += v;
    }
    w.samples[i] = acc / channels;
  }
  return w;
}

void write_wav_pcm16(const std::filesystem::path& path, const Waveform& w) {
  if (w.sample_rate <= 0) throw std::runtime_error("wav: cannot write waveform with sample_rate 0");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");

  const std::uint32_t data_len = static_cast<std::uint32_t>(w.samples.size() * 2);
  const std::uint32_t riff_len = 36 + data_len;
  const std::uint32_t sr = static_cast<std::uint32_t>(w.sample_rate);
  const std::uint32_t byte_rate = sr * 2;

  auto put_u32 = [&out](std::uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
                 static_cast<char>(v >> 24)};
    out.write(b, 4);
  };
  auto put_u16 = [&out](std::uint16_t v) {
    char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
    out.write(b, 2);
  };

  out.write("RIFF", 4);
  put_u32(riff_len);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(16);
  put_u16(kFormatPcm);
  put_u16(1);  // mono
  put_u32(sr);
  put_u32(byte_rate);
  put_u16(2);   // block align
  put_u16(16);  // bits
  out.write("data", 4);
  put_u32(data_len);
  for (double s : w.samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    const auto q = static_cast<std::int16_t>(std::lrint(clamped * 32767.0));
    put_u16(static_cast<std::uint16_t>(q));
  }
  if (!out) fail(path, "write failed");
}

}  // namespace ser
