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

#ifndef TEGG_FIXTURES_HPP_
#define TEGG_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tegg/signal.hpp"
#include "tegg/spectral.hpp"

namespace tegg {

// Synthetic source-filter material with known ground truth.

enum class PulseShape { kImpulseTrain, kRosenberg };

// Rosenberg pulse phases as fractions of the period.
inline constexpr double kRosenbergOpenFraction = 0.6;
inline constexpr double kRosenbergCloseFraction = 0.3;

MonoSignal synth_glottal_source(double f0, double duration_s, int sample_rate,
                                PulseShape shape = PulseShape::kRosenberg);

struct Resonance {
  double center_hz = 0.0;
  double bandwidth_hz = 0.0;
};

struct FormantSegment {
  double duration_ms = 0.0;
  std::vector<Resonance> resonances;
};

struct FormantTrack {
  std::vector<FormantSegment> segments;

  double total_ms() const;
  void validate(int sample_rate) const;

  static FormantTrack stationary(std::vector<Resonance> resonances, double duration_ms);
  // Alternates between two resonance sets every segment_ms until duration_ms.
  static FormantTrack alternating(std::vector<Resonance> first,
                                  std::vector<Resonance> second,
                                  double segment_ms, double duration_ms);
};

inline constexpr double kSegmentCrossfadeMs = 5.0;

// Monic denominator of the cascade of two-pole resonators, poles at radius
// exp(-pi bw / fs) and angle 2 pi fc / fs.
std::vector<double> resonator_denominator(const std::vector<Resonance>& resonances,
                                          int sample_rate);

// |1 / A(e^jw)| of the resonator cascade designed at synth_rate, sampled on
// the one-sided grid of a grid_size-point FFT at grid_rate.
MagnitudeResponse resonator_magnitude(const std::vector<Resonance>& resonances,
                                      int synth_rate, std::size_t grid_size,
                                      int grid_rate);

// Filters the source through each segment's resonators, joining segments
// with kSegmentCrossfadeMs linear crossfades centred on the boundaries.
MonoSignal synth_speech(const MonoSignal& source, const FormantTrack& track);

struct FixtureSpec {
  int sample_rate = 48000;
  double f0 = 120.0;
  double duration_s = 1.0;
  PulseShape shape = PulseShape::kRosenberg;
  // Differentiate the source (lip radiation) before it drives the tract and
  // the EGG channel.
  bool lip_radiation = true;
  FormantTrack track;  // empty: a single neutral vowel
  // Sinusoidal syllable-rate amplitude modulation (depth 0 disables).
  double am_rate_hz = 0.0;
  double am_depth = 0.0;
  // Leading and trailing spans where the voice source is off.
  double lead_silence_ms = 0.0;
  double trail_silence_ms = 0.0;
  double speech_peak = 0.5;
  double egg_peak = 0.5;
  // White noise on the speech channel, RMS in dBFS; at or below -200 disables.
  double noise_dbfs = -200.0;
  std::uint64_t seed = 1;
};

// Lip radiation 1 - d z^-1, with d given at 16 kHz and mapped to the signal's rate
// so the corner frequency stays put.
MonoSignal lip_radiate(const MonoSignal& source, double coefficient_16k = 0.99);

// Neutral vowel used when a fixture spec has no track.
std::vector<Resonance> neutral_vowel();

// Two-track take: speech = source through the track, EGG = the source.
StereoRecording make_fixture(const FixtureSpec& spec);

}  // namespace tegg

#endif  // TEGG_FIXTURES_HPP_
