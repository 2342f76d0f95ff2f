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

#ifndef TEGG_VAD_HPP_
#define TEGG_VAD_HPP_

#include <cstddef>
#include <vector>

#include "tegg/framing.hpp"
#include "tegg/signal.hpp"

namespace tegg {

struct VadConfig {
  // Noise floor is this percentile of the frame energies (dB).
  double noise_percentile = 20.0;
  // A frame is voiced when its energy exceeds the floor by this much.
  double margin_db = 9.0;
  // Frames kept voiced after the energy falls below threshold.
  int hangover_frames = 5;
  // If every frame lies within this spread, the relative rule is replaced by
  // the absolute floor below.
  double degenerate_spread_db = 0.5;
  double absolute_floor_dbfs = -60.0;
  // Frames at or below this RMS are digital silence: they never enter the
  // noise-floor estimate and are only flagged through hangover.
  double silence_rms = 1e-10;
};

struct VoiceMask {
  FrameSpec spec;
  std::vector<bool> frame_flags;
  std::vector<double> frame_energy_db;
  // One flag per input sample: set iff some voiced frame covers the sample.
  std::vector<bool> sample_flags;
  double threshold_db = 0.0;

  std::size_t voiced_frames() const;
  std::size_t voiced_samples() const;
};

// Energy-based voice activity detection on the frame grid of `spec`.
// Silence yields an all-false mask rather than an error.
VoiceMask detect_voice(const MonoSignal& signal, const FrameSpec& spec,
                       const VadConfig& config = {});

// Concatenates the flagged samples in order. Throws Errc::kNoVoicedSamples
// when nothing is flagged.
MonoSignal extract_voiced(const MonoSignal& signal, const VoiceMask& mask);

}  // namespace tegg

#endif  // TEGG_VAD_HPP_
