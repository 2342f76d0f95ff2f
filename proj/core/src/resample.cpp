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

#include "tegg/resample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tegg/error.hpp"

namespace tegg {

std::vector<double> design_decimation_filter(int source_rate, int factor,
                                             const DecimatorDesign& design) {
  const double target_rate = static_cast<double>(source_rate) / factor;
  const double f_pass = design.passband_fraction * target_rate;
  const double f_stop = design.stopband_fraction * target_rate;
  const double cutoff = 0.5 * (f_pass + f_stop) / source_rate;  // cycles/sample
  const double transition = 2.0 * std::numbers::pi * (f_stop - f_pass) / source_rate;
  const double atten = design.stopband_attenuation_db;

  double beta = 0.0;
  if (atten > 50.0) {
    beta = 0.1102 * (atten - 8.7);
  } else if (atten >= 21.0) {
    beta = 0.5842 * std::pow(atten - 21.0, 0.4) + 0.07886 * (atten - 21.0);
  }
  auto length = static_cast<std::size_t>(std::ceil((atten - 8.0) / (2.285 * transition))) + 1;
  if (length % 2 == 0) ++length;

  const double center = static_cast<double>(length - 1) / 2.0;
  const double i0_beta = std::cyl_bessel_i(0.0, beta);
  std::vector<double> taps(length);
  double sum = 0.0;
  for (std::size_t n = 0; n < length; ++n) {
    const double t = static_cast<double>(n) - center;
    const double sinc = t == 0.0 ? 2.0 * cutoff
                                 : std::sin(2.0 * std::numbers::pi * cutoff * t) /
                                       (std::numbers::pi * t);
    const double r = t / center;
    const double kaiser = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - r * r))) /
                          i0_beta;
    taps[n] = sinc * kaiser;
    sum += taps[n];
  }
  for (double& v : taps) v /= sum;
  return taps;
}

MonoSignal resample_down(const MonoSignal& signal, int target_rate,
                         const DecimatorDesign& design) {
  const int source_rate = signal.sample_rate();
  if (target_rate <= 0 || target_rate >= source_rate) {
    throw Error(Errc::kInvalidArgument,
                "target rate " + std::to_string(target_rate) +
                    " must be positive and below the source rate " +
                    std::to_string(source_rate));
  }
  if (source_rate % target_rate != 0) {
    throw Error(Errc::kInvalidArgument,
                "target rate " + std::to_string(target_rate) +
                    " does not divide the source rate " + std::to_string(source_rate));
  }
  const int factor = source_rate / target_rate;
  const std::vector<double> taps = design_decimation_filter(source_rate, factor, design);
  const auto half = static_cast<std::ptrdiff_t>(taps.size() / 2);
  const auto x = signal.samples();
  const auto len = static_cast<std::ptrdiff_t>(x.size());

  std::vector<double> out((x.size() + factor - 1) / factor);
  for (std::size_t m = 0; m < out.size(); ++m) {
    const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(m) * factor;
    const std::ptrdiff_t k_lo = std::max<std::ptrdiff_t>(0, half - c);
    const std::ptrdiff_t k_hi =
        std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(taps.size()), len - c + half);
    double acc = 0.0;
    for (std::ptrdiff_t k = k_lo; k < k_hi; ++k) {
      acc += taps[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(c + k - half)];
    }
    out[m] = acc;
  }
  return MonoSignal(std::move(out), target_rate);
}

SosFilter interpolation_filter(int input_rate, int factor) {
  return chebyshev1_lowpass(kInterpolationOrder, kInterpolationRippleDb, input_rate / 2.0,
                            static_cast<double>(input_rate) * factor,
                            kInterpolationZeroRadius);
}

MonoSignal interpolate_impulse_response(const MonoSignal& h, int factor) {
  if (factor < 2) {
    throw Error(Errc::kInvalidArgument, "interpolation factor must be >= 2");
  }
  if (h.empty()) throw Error(Errc::kEmptySignal, "cannot interpolate an empty response");
  std::vector<double> up(h.size() * static_cast<std::size_t>(factor), 0.0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    up[i * static_cast<std::size_t>(factor)] = h[i] * factor;
  }
  const SosFilter lp = interpolation_filter(h.sample_rate(), factor);
  return MonoSignal(lp.filter(up), h.sample_rate() * factor);
}

}  // namespace tegg
