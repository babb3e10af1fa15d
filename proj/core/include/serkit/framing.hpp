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

#ifndef SERKIT_FRAMING_HPP
#define SERKIT_FRAMING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "serkit/waveform.hpp"

namespace ser {

enum class WindowFn { hann, rectangular };

/// Short-time analysis geometry. Durations are in seconds so one config
/// can serve corpora with different sample rates; sample counts are
/// resolved per waveform. fft_size of 0 means "next power of two that
/// holds a window".
struct FrameConfig {
  double window_s = 0.025;
  double hop_s = 0.010;
  WindowFn window_fn = WindowFn::hann;
  std::size_t fft_size = 0;

  std::size_t window_length(int sample_rate) const;
  std::size_t hop_length(int sample_rate) const;
  std::size_t fft_length(int sample_rate) const;

  /// Enforces 0 < hop <= window and power-of-two fft >= window length.
  void validate(int sample_rate) const;

  /// Stable textual form, used in cache keys.
  std::string describe() const;

  static FrameConfig mfcc_default();     // 10 ms / 5 ms, Hann
  static FrameConfig logmel_default();   // 14 ms / 3.5 ms, Hann
  static FrameConfig cleaning_default(); // 32 ms / 16 ms, Hann
};

/// Frames covered by a signal of `len` samples: floor((len-win)/hop)+1.
std::size_t frame_count(std::size_t len, std::size_t win, std::size_t hop);

/// Splits w into windowed frames; frame t covers [t*hop, t*hop+win).
/// Throws std::runtime_error if the signal is shorter than one window.
std::vector<std::vector<double>> frame_signal(const Waveform& w, const FrameConfig& cfg);

/// Same geometry without the window function, for the scalar feature
/// tracks (energy, magnitude, ZCR, pitch) that operate on raw frames.
std::vector<std::vector<double>> frame_signal_raw(const Waveform& w, const FrameConfig& cfg);

}  // namespace ser

#endif  // SERKIT_FRAMING_HPP
