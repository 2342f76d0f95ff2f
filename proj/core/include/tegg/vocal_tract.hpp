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

#ifndef TEGG_VOCAL_TRACT_HPP_
#define TEGG_VOCAL_TRACT_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tegg/framing.hpp"
#include "tegg/lpc.hpp"
#include "tegg/signal.hpp"
#include "tegg/spectral.hpp"

namespace tegg {

inline constexpr std::size_t kDefaultGridSize = 4096;
inline constexpr std::size_t kDefaultTaps = 2048;
// Grid oversampling for the output-rate minimum-phase pass.
inline constexpr std::size_t kRephaseOversample = 4;

struct VocalTractAnalysis {
  MagnitudeResponse mean_magnitude;
  std::vector<LpcEstimate> frames;  // accepted frames, in time order
  std::size_t frames_used = 0;
  std::size_t frames_skipped = 0;
};

// Average speaker vocal tract and its impulse response at the output rate.
struct AvgVocalTract {
  MagnitudeResponse mean_magnitude;
  MonoSignal impulse_response;
  std::size_t frames_used = 0;
  std::size_t frames_skipped = 0;
};

// |1 / A_v| of one estimate on the grid.
MagnitudeResponse vocal_tract_magnitude(const LpcEstimate& estimate,
                                        std::size_t grid_size, int sample_rate);

// Arithmetic mean of linear magnitudes, with compensated summation so the
// result does not depend on frame order beyond rounding of the final sum.
MagnitudeResponse mean_magnitude(std::span<const MagnitudeResponse> responses);

// Runs gfm_iaif on every frame of the voiced signal (frame grid from `spec`,
// windowing done inside gfm_iaif) and averages |1 / A_v|. Frames whose LPC
// solve is degenerate are skipped and counted. Throws Errc::kNoVoicedFrames
// when no frame survives.
VocalTractAnalysis analyze_vocal_tract(const MonoSignal& voiced_speech,
                                       const FrameSpec& spec,
                                       std::size_t grid_size = kDefaultGridSize,
                                       const GfmIaifConfig& lpc = {});

MagnitudeResponse average_vocal_tract(const MonoSignal& voiced_speech,
                                      const FrameSpec& spec,
                                      std::size_t grid_size = kDefaultGridSize);

// Minimum-phase FIR of the mean magnitude, interpolated to output_rate when
// that is a multiple of the analysis rate. The target is pre-divided by the
// interpolation filter's passband droop and the result scaled by 1/factor,
// so |FFT(h)| follows the mean below the analysis Nyquist. The interpolated
// response is made minimum phase again at output_rate.
MonoSignal build_impulse_response(const MagnitudeResponse& mean,
                                  std::size_t n_taps, int output_rate);

}  // namespace tegg

#endif  // TEGG_VOCAL_TRACT_HPP_
