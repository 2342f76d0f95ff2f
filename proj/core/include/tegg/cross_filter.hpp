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

#ifndef TEGG_CROSS_FILTER_HPP_
#define TEGG_CROSS_FILTER_HPP_

#include <cstddef>
#include <vector>

#include "tegg/framing.hpp"
#include "tegg/signal.hpp"
#include "tegg/stft.hpp"
#include "tegg/vad.hpp"

namespace tegg {

// Linear convolution g * h truncated to g's length, so the filtered source
// stays on the same frame grid as the speech.
MonoSignal convolve(const MonoSignal& g, const MonoSignal& h);

// Per-frame sum of one-sided bin magnitudes.
struct Envelope {
  std::vector<double> values;
};

struct ModulationVector {
  std::vector<double> values;
  std::vector<bool> guard_mask;

  std::size_t guarded() const;
};

inline constexpr double kDefaultGuardRelative = 1e-10;
inline constexpr double kDefaultMaxRatio = 1e4;

Envelope energy_envelope(const Spectrogram& spectrogram);

// R[n] = e_s[n] / e_y[n] where e_y[n] > epsilon, else 0 with the guard flag
// set. Values are capped at r_max.
ModulationVector modulation_ratio(const Envelope& e_s, const Envelope& e_y,
                                  double epsilon, double r_max = kDefaultMaxRatio);

// Z = Y diag(R): each complex column scaled by its real ratio.
Spectrogram apply_ratio(const Spectrogram& y, const ModulationVector& r);

struct F0Search {
  double min_hz = 50.0;
  double max_hz = 500.0;
  double min_correlation = 0.3;
};

// Median over voiced frames of the normalized-autocorrelation pitch. Throws
// Errc::kCannotEstimateF0 if no voiced frame has a peak above
// min_correlation.
double estimate_f0(const MonoSignal& signal, const VoiceMask& mask,
                   const F0Search& search = {});

inline constexpr double kEggHighpassOffsetHz = 20.0;
inline constexpr int kEggHighpassOrder = 4;
inline constexpr double kEggHighpassRippleDb = 0.5;

double egg_highpass_cutoff(double f0);

// Zero-phase 4th-order Chebyshev type I high-pass at f0 - 20 Hz.
MonoSignal adaptive_highpass_egg(const MonoSignal& g, double f0);

// Stage two on already-aligned signals: y = egg * h, then the speech's
// short-time envelope is imposed on y's STFT and the result inverted.
struct CrossSynthesis {
  MonoSignal output;
  MonoSignal filtered_source;
  Envelope speech_envelope;
  Envelope source_envelope;
  ModulationVector ratio;
  Spectrogram output_spectrogram;
};

CrossSynthesis cross_synthesize(const MonoSignal& speech, const MonoSignal& egg,
                                const MonoSignal& h, const FrameSpec& spec,
                                double guard_relative = kDefaultGuardRelative,
                                double r_max = kDefaultMaxRatio);

}  // namespace tegg

#endif  // TEGG_CROSS_FILTER_HPP_
