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

#ifndef TEGG_TRANSFORM_HPP_
#define TEGG_TRANSFORM_HPP_

#include <cstddef>
#include <optional>

#include "tegg/cross_filter.hpp"
#include "tegg/lpc.hpp"
#include "tegg/signal.hpp"
#include "tegg/spectral.hpp"
#include "tegg/vad.hpp"
#include "tegg/vocal_tract.hpp"

namespace tegg {

struct TransformConfig {
  double frame_ms = 20.0;
  double overlap = 0.5;
  int lpc_rate = 16000;
  // 0 means the recording's own rate; anything else must match it.
  int output_rate = 0;
  std::size_t grid_size = kDefaultGridSize;
  std::size_t n_taps = kDefaultTaps;
  VadConfig vad;
  GfmIaifConfig lpc;
  double guard_relative = kDefaultGuardRelative;
  double r_max = kDefaultMaxRatio;
  bool egg_highpass = false;
  // Used instead of the estimate when egg_highpass is set.
  std::optional<double> egg_f0;

  // Throws Errc::kInvalidArgument on inconsistent settings.
  void validate() const;
};

struct Diagnostics {
  VoiceMask vad_mask;
  MagnitudeResponse mean_magnitude;
  ModulationVector ratio;
  std::size_t frames_used = 0;
  std::size_t frames_skipped = 0;
  std::size_t guard_frames = 0;
  std::size_t voiced_samples = 0;
  std::optional<double> f0_estimate;
  std::optional<double> highpass_cutoff_hz;
  double runtime_ms = 0.0;
  double realtime_factor = 0.0;
};

struct TransformResult {
  MonoSignal output;            // z(t), same length and rate as the speech
  MonoSignal impulse_response;  // h(t) at the output rate
  Diagnostics diagnostics;
};

// Full speech + EGG -> tEGG pipeline:
//   speech -> downsample to lpc_rate -> VAD -> voiced samples
//          -> per-frame GFM-IAIF -> mean |1/A_v| -> minimum-phase h(t)
//   egg (optionally high-passed) * h -> y(t)
//   z = ISTFT( STFT(y) diag(E_S / E_Y) )
// Throws Errc::kNoVoicedFrames for silent speech and Errc::kSilentEgg when
// the filtered source is identically zero.
TransformResult transform(const StereoRecording& recording,
                          const TransformConfig& config = {});

}  // namespace tegg

#endif  // TEGG_TRANSFORM_HPP_
