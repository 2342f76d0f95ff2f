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

#include "tegg/vocal_tract.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tegg/error.hpp"
#include "tegg/fft.hpp"
#include "tegg/resample.hpp"

namespace tegg {
namespace {

// Largest droop correction applied ahead of interpolation.
constexpr double kMaxDroopBoostDb = 12.0;

}  // namespace

MagnitudeResponse vocal_tract_magnitude(const LpcEstimate& estimate,
                                        std::size_t grid_size, int sample_rate) {
  const auto h = evaluate_all_pole_response(estimate.a_v, grid_size);
  std::vector<double> mag(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) mag[k] = std::abs(h[k]);
  return MagnitudeResponse(std::move(mag), grid_size, sample_rate);
}

MagnitudeResponse mean_magnitude(std::span<const MagnitudeResponse> responses) {
  if (responses.empty()) {
    throw Error(Errc::kNoVoicedFrames, "no frames to average");
  }
  const MagnitudeResponse& first = responses.front();
  const std::size_t bins = first.size();
  std::vector<double> sum(bins, 0.0), comp(bins, 0.0);
  for (const MagnitudeResponse& r : responses) {
    if (r.size() != bins || r.grid_size != first.grid_size ||
        r.sample_rate != first.sample_rate) {
      throw Error(Errc::kDimensionMismatch, "responses are on different grids");
    }
    for (std::size_t k = 0; k < bins; ++k) {
      // Neumaier summation.
      const double v = r.magnitudes[k];
      const double t = sum[k] + v;
      comp[k] += std::abs(sum[k]) >= std::abs(v) ? (sum[k] - t) + v : (v - t) + sum[k];
      sum[k] = t;
    }
  }
  const auto n = static_cast<double>(responses.size());
  std::vector<double> mean(bins);
  for (std::size_t k = 0; k < bins; ++k) mean[k] = (sum[k] + comp[k]) / n;
  return MagnitudeResponse(std::move(mean), first.grid_size, first.sample_rate);
}

VocalTractAnalysis analyze_vocal_tract(const MonoSignal& voiced_speech,
                                       const FrameSpec& spec,
                                       std::size_t grid_size,
                                       const GfmIaifConfig& lpc) {
  const auto frames =
      frame_signal(voiced_speech, spec.with_window(WindowKind::kRectangular));
  VocalTractAnalysis out;
  std::vector<MagnitudeResponse> responses;
  responses.reserve(frames.size());
  for (const auto& frame : frames) {
    try {
      LpcEstimate est = gfm_iaif(frame, voiced_speech.sample_rate(), lpc);
      responses.push_back(vocal_tract_magnitude(est, grid_size, voiced_speech.sample_rate()));
      out.frames.push_back(std::move(est));
    } catch (const Error& e) {
      if (e.code() != Errc::kDegenerateFrame && e.code() != Errc::kUnstableFilter) throw;
      ++out.frames_skipped;
    }
  }
  out.frames_used = responses.size();
  if (responses.empty()) {
    throw Error(Errc::kNoVoicedFrames,
                "no voiced frames: all " + std::to_string(frames.size()) +
                    " analysis frames were degenerate");
  }
  out.mean_magnitude = mean_magnitude(responses);
  return out;
}

MagnitudeResponse average_vocal_tract(const MonoSignal& voiced_speech,
                                      const FrameSpec& spec,
                                      std::size_t grid_size) {
  return analyze_vocal_tract(voiced_speech, spec, grid_size).mean_magnitude;
}

MonoSignal build_impulse_response(const MagnitudeResponse& mean,
                                  std::size_t n_taps, int output_rate) {
  const int rate = mean.sample_rate;
  if (output_rate == rate) return min_phase_fir(mean, n_taps);
  if (output_rate < rate || output_rate % rate != 0) {
    throw Error(Errc::kInvalidArgument,
                "output rate " + std::to_string(output_rate) +
                    " is not an integer multiple of the analysis rate " + std::to_string(rate));
  }
  const int factor = output_rate / rate;
  const SosFilter lp = interpolation_filter(rate, factor);
  const double max_boost = std::pow(10.0, kMaxDroopBoostDb / 20.0);

  MagnitudeResponse target = mean;
  for (std::size_t k = 0; k < target.size(); ++k) {
    const double gain = std::abs(lp.response(mean.frequency(k), output_rate));
    target.magnitudes[k] *= std::min(1.0 / gain, max_boost);
  }
  const MonoSignal h =
      interpolate_impulse_response(min_phase_fir(target, n_taps), factor).scaled(1.0 / factor);
  // Truncating the filtered response pushes near-circle zeros outward; rebuild
  // the phase from the interpolated magnitude at the output rate.
  const std::size_t grid = next_power_of_two(kRephaseOversample * h.size());
  return min_phase_fir(MagnitudeResponse(fir_magnitude(h.samples(), grid), grid, output_rate),
                       h.size());
}

}  // namespace tegg
