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

#include "serkit/framing.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "serkit/dsp.hpp"

namespace ser {

std::size_t FrameConfig::window_length(int sample_rate) const {
  return static_cast<std::size_t>(std::lround(window_s * sample_rate));
}

std::size_t FrameConfig::hop_length(int sample_rate) const {
  return static_cast<std::size_t>(std::lround(hop_s * sample_rate));
}

std::size_t FrameConfig::fft_length(int sample_rate) const {
  return fft_size != 0 ? fft_size : next_power_of_two(window_length(sample_rate));
}

void FrameConfig::validate(int sample_rate) const {
  if (sample_rate <= 0) throw std::runtime_error("frame config: sample rate must be positive");
  const std::size_t win = window_length(sample_rate);
  const std::size_t hop = hop_length(sample_rate);
  if (win == 0 || hop == 0) throw std::runtime_error("frame config: window and hop must be nonzero");
  if (hop > win) throw std::runtime_error("frame config: hop exceeds window");
  const std::size_t fft = fft_length(sample_rate);
  if (!is_power_of_two(fft)) throw std::runtime_error("frame config: fft size must be a power of two");
  if (fft < win) throw std::runtime_error("frame config: fft size smaller than window");
}

std::string FrameConfig::describe() const {
  std::ostringstream os;
  os << "win=" << window_s << ",hop=" << hop_s
     << ",fn=" << (window_fn == WindowFn::hann ? "hann" : "rect") << ",fft=" << fft_size;
  return os.str();
}

FrameConfig FrameConfig::mfcc_default() { return FrameConfig{0.010, 0.005, WindowFn::hann, 0}; }

FrameConfig FrameConfig::logmel_default() { return FrameConfig{0.014, 0.0035, WindowFn::hann, 0}; }

FrameConfig FrameConfig::cleaning_default() { return FrameConfig{0.032, 0.016, WindowFn::hann, 0}; }

std::size_t frame_count(std::size_t len, std::size_t win, std::size_t hop) {
  if (len < win) return 0;
  return (len - win) / hop + 1;
}

namespace {

std::vector<std::vector<double>> frame_impl(const Waveform& w, const FrameConfig& cfg, bool windowed) {
  cfg.validate(w.sample_rate);
  const std::size_t win = cfg.window_length(w.sample_rate);
  const std::size_t hop = cfg.hop_length(w.sample_rate);
  const std::size_t n = frame_count(w.size(), win, hop);
  if (n == 0) {
    throw std::runtime_error("frame_signal: signal (" + std::to_string(w.size()) +
                             " samples) shorter than one window (" + std::to_string(win) + ")");
  }
  std::vector<double> window;
  if (windowed && cfg.window_fn == WindowFn::hann) window = hann_window(win);
  std::vector<std::vector<double>> frames(n);
  for (std::size_t t = 0; t < n; ++t) {
    frames[t].resize(win);
    const double* src = w.samples.data() + t * hop;
    if (window.empty()) {
      for (std::size_t i = 0; i < win; ++i) frames[t][i] = src[i];
    } else {
      for (std::size_t i = 0; i < win; ++i) frames[t][i] = src[i] * window[i];
    }
  }
  return frames;
}

}  // namespace

std::vector<std::vector<double>> frame_signal(const Waveform& w, const FrameConfig& cfg) {
  return frame_impl(w, cfg, true);
}

std::vector<std::vector<double>> frame_signal_raw(const Waveform& w, const FrameConfig& cfg) {
  return frame_impl(w, cfg, false);
}

}  // namespace ser
