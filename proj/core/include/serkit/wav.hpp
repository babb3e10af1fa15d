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

#ifndef SERKIT_WAV_HPP
#define SERKIT_WAV_HPP

#include <filesystem>

#include "serkit/waveform.hpp"

namespace ser {

/// Decodes a RIFF/WAVE file. Supported: PCM 16-bit, PCM 24-bit, IEEE
/// float 32-bit, 1 or 2 channels. Stereo is mixed down by per-sample
/// channel average; integer samples are scaled by 1/2^(bits-1).
/// Throws std::runtime_error on unsupported codecs or truncated chunks.
Waveform read_wav(const std::filesystem::path& path);

/// Writes a mono PCM16 little-endian WAV. Samples are clamped to [-1, 1].
void write_wav_pcm16(const std::filesystem::path& path, const Waveform& w);

}  // namespace ser

#endif  // SERKIT_WAV_HPP
