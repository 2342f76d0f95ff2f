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

#include "tegg/transform.hpp"

#include <chrono>
#include <string>

#include "tegg/error.hpp"
#include "tegg/fft.hpp"
#include "tegg/resample.hpp"

namespace tegg {

void TransformConfig::validate() const {
  if (lpc_rate <= 0) throw Error(Errc::kInvalidArgument, "lpc rate must be positive");
  if (output_rate < 0) throw Error(Errc::kInvalidArgument, "output rate must be >= 0");
  if (grid_size < 64 || !is_power_of_two(grid_size)) {
    throw Error(Errc::kInvalidArgument, "grid size must be a power of two >= 64");
  }
  if (n_taps < 1 || n_taps > grid_size) {
    throw Error(Errc::kInvalidArgument, "tap count must be in [1, grid size]");
  }
  if (!(guard_relative >= 0.0) || !(r_max > 0.0)) {
    throw Error(Errc::kInvalidArgument, "guard and ratio cap must be non-negative");
  }
  if (egg_f0 && !(*egg_f0 > 25.0)) {
    throw Error(Errc::kInvalidArgument, "explicit EGG f0 must exceed 25 Hz");
  }
  FrameSpec(frame_ms, overlap, lpc_rate).validate();
}

TransformResult transform(const StereoRecording& recording,
                          const TransformConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  config.validate();
  const MonoSignal& speech = recording.speech;
  const int rate = speech.sample_rate();
  if (config.output_rate != 0 && config.output_rate != rate) {
    throw Error(Errc::kInvalidArgument,
                "output rate " + std::to_string(config.output_rate) +
                    " differs from the recording rate " + std::to_string(rate));
  }
  if (config.lpc_rate > rate || rate % config.lpc_rate != 0) {
    throw Error(Errc::kInvalidArgument,
                "lpc rate " + std::to_string(config.lpc_rate) +
                    " must divide the recording rate " + std::to_string(rate));
  }

  TransformResult result;
  Diagnostics& diag = result.diagnostics;

  // Stage one: average vocal tract from voiced speech at the LPC rate.
  const MonoSignal lpc_speech =
      config.lpc_rate == rate ? speech : resample_down(speech, config.lpc_rate);
  const FrameSpec lpc_spec(config.frame_ms, config.overlap, config.lpc_rate);
  diag.vad_mask = detect_voice(lpc_speech, lpc_spec, config.vad);
  if (diag.vad_mask.voiced_frames() == 0) {
    throw Error(Errc::kNoVoicedFrames, "no voiced frames in the speech channel");
  }
  const MonoSignal voiced = extract_voiced(lpc_speech, diag.vad_mask);
  diag.voiced_samples = voiced.size();
  if (voiced.size() < lpc_spec.window_length()) {
    throw Error(Errc::kNoVoicedFrames, "no voiced frames: voiced speech shorter than one window");
  }
  VocalTractAnalysis tract =
      analyze_vocal_tract(voiced, lpc_spec, config.grid_size, config.lpc);
  diag.frames_used = tract.frames_used;
  diag.frames_skipped = tract.frames_skipped;
  if (tract.frames_skipped > 0) {
    warn(std::to_string(tract.frames_skipped) + " degenerate LPC frames skipped");
  }
  result.impulse_response = build_impulse_response(tract.mean_magnitude, config.n_taps, rate);
  diag.mean_magnitude = std::move(tract.mean_magnitude);

  MonoSignal egg = recording.egg;
  if (config.egg_highpass) {
    const double f0 = config.egg_f0 ? *config.egg_f0 : estimate_f0(lpc_speech, diag.vad_mask);
    diag.f0_estimate = f0;
    diag.highpass_cutoff_hz = egg_highpass_cutoff(f0);
    egg = adaptive_highpass_egg(egg, f0);
  }

  // Stage two: envelope transfer on the output-rate grid.
  const FrameSpec out_spec(config.frame_ms, config.overlap, rate);
  CrossSynthesis cs = cross_synthesize(speech, egg, result.impulse_response, out_spec,
                                       config.guard_relative, config.r_max);
  result.output = std::move(cs.output);
  diag.ratio = std::move(cs.ratio);
  diag.guard_frames = diag.ratio.guarded();

  const auto t1 = std::chrono::steady_clock::now();
  diag.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  diag.realtime_factor =
      diag.runtime_ms > 0.0 ? speech.duration_seconds() * 1000.0 / diag.runtime_ms : 0.0;
  return result;
}

}  // namespace tegg
