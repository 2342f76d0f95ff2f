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

#ifndef TEGG_IIR_HPP_
#define TEGG_IIR_HPP_

#include <complex>
#include <span>
#include <vector>

namespace tegg {

// One second-order section, a0 normalized to 1:
//   H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

// Cascade of second-order sections.
struct SosFilter {
  std::vector<Biquad> sections;

  std::complex<double> response(double freq_hz, double sample_rate) const;
  std::vector<double> filter(std::span<const double> x) const;
  // Forward-backward (zero-phase) application with pad_length samples of
  // odd-extension padding at both ends (clamped to the signal length). The
  // effective magnitude response is |H|^2.
  std::vector<double> filtfilt(std::span<const double> x,
                               std::size_t pad_length) const;
};

// Chebyshev type I high-pass via the bilinear transform. The passband
// (above cutoff_hz) stays within ripple_db of unity.
SosFilter chebyshev1_highpass(int order, double ripple_db, double cutoff_hz,
                              double sample_rate);

// Chebyshev type I low-pass via the bilinear transform, scaled to unit DC
// gain, so the passband (below cutoff_hz) lies within [0, ripple_db] dB. The
// zeros the transform places at z = -1 are moved to -zero_radius.
SosFilter chebyshev1_lowpass(int order, double ripple_db, double cutoff_hz,
                             double sample_rate, double zero_radius = 1.0);

}  // namespace tegg

#endif  // TEGG_IIR_HPP_
