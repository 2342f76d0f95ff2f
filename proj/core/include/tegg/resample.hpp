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

#ifndef TEGG_RESAMPLE_HPP_
#define TEGG_RESAMPLE_HPP_

#include <vector>

#include "tegg/iir.hpp"
#include "tegg/signal.hpp"

namespace tegg {

// Anti-aliasing decimator design. The passband runs to passband_fraction of
// the target rate and the stopband starts at stopband_fraction of it.
struct DecimatorDesign {
  double passband_fraction = 0.45;
  double stopband_fraction = 0.4875;
  double stopband_attenuation_db = 80.0;
};

// Linear-phase Kaiser-windowed sinc low-pass for decimating by `factor` from
// `source_rate`. Odd length, symmetric, unit DC gain.
std::vector<double> design_decimation_filter(int source_rate, int factor,
                                             const DecimatorDesign& design = {});

// Integer-factor downsampling with a zero-phase anti-alias filter. Output
// sample m corresponds to input sample factor * m, so the output length is
// ceil(n / factor) and time alignment is preserved.
MonoSignal resample_down(const MonoSignal& signal, int target_rate,
                         const DecimatorDesign& design = {});

inline constexpr int kInterpolationOrder = 4;
inline constexpr double kInterpolationRippleDb = 0.5;
// Radius of the interpolation filter's four zeros near z = -1.
inline constexpr double kInterpolationZeroRadius = 0.999;

// Low-pass applied after zero insertion: 4th-order Chebyshev type I with its
// passband edge at the original Nyquist, unit DC gain.
SosFilter interpolation_filter(int input_rate, int factor);

// Zero insertion by `factor` followed by interpolation_filter, with the
// samples scaled by `factor` so that signal level is preserved. The output
// has factor * h.size() samples at factor * h.sample_rate().
MonoSignal interpolate_impulse_response(const MonoSignal& h, int factor);

}  // namespace tegg

#endif  // TEGG_RESAMPLE_HPP_
