// Copyright 2026 The tegg Authors
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

#ifndef TEGG_WAV_HPP_
#define TEGG_WAV_HPP_

#include <cstddef>
#include <filesystem>
#include <vector>

#include "tegg/signal.hpp"

namespace tegg {

enum class SpeechChannel { kLeft, kRight };

enum class WavEncoding { kPcm16, kPcm24, kPcm32, kFloat32 };

int bits_per_sample(WavEncoding encoding);

// Decoded contents of a RIFF/WAVE file, one vector per channel.
struct WavData {
  int sample_rate = 0;
  WavEncoding encoding = WavEncoding::kPcm16;
  std::vector<std::vector<double>> channels;
};

// Reads any 1- or 2-channel PCM 16/24/32-bit or float32 WAV file (plain or
// WAVE_FORMAT_EXTENSIBLE). Integer samples are scaled by 2^-(bits-1).
WavData read_wav(const std::filesystem::path& path);

// Reads a two-track take. By default speech is the left channel and the EGG
// is the right one.
StereoRecording read_recording(const std::filesystem::path& path,
                               SpeechChannel speech = SpeechChannel::kLeft);

struct WavWriteResult {
  std::size_t clipped_samples = 0;
};

// Samples outside [-1, 1] are clipped and reported through tegg::warn. The
// file is written to a temporary sibling and renamed into place.
WavWriteResult write_wav(const MonoSignal& signal,
                         const std::filesystem::path& path,
                         WavEncoding encoding = WavEncoding::kPcm24);

WavWriteResult write_stereo_wav(const MonoSignal& left, const MonoSignal& right,
                                const std::filesystem::path& path,
                                WavEncoding encoding = WavEncoding::kPcm24);

}  // namespace tegg

#endif  // TEGG_WAV_HPP_
