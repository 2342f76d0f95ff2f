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

#include "tegg/vad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tegg/error.hpp"

namespace tegg {
namespace {

double percentile(std::vector<double> values, double pct) {
  std::sort(values.begin(), values.end());
  const double pos = pct / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

}  // namespace

std::size_t VoiceMask::voiced_frames() const {
  return static_cast<std::size_t>(std::count(frame_flags.begin(), frame_flags.end(), true));
}

std::size_t VoiceMask::voiced_samples() const {
  return static_cast<std::size_t>(std::count(sample_flags.begin(), sample_flags.end(), true));
}

VoiceMask detect_voice(const MonoSignal& signal, const FrameSpec& spec,
                       const VadConfig& config) {
  if (signal.sample_rate() != spec.sample_rate) {
    throw Error(Errc::kInvalidArgument, "signal rate does not match frame spec rate");
  }
  spec.validate();
  VoiceMask mask;
  mask.spec = spec;
  mask.sample_flags.assign(signal.size(), false);
  if (signal.size() < spec.window_length()) return mask;

  const FrameGrid grid = FrameGrid::plan(signal.size(), spec);
  const auto x = signal.samples();
  const auto len = static_cast<std::ptrdiff_t>(x.size());

  std::vector<bool> silent(grid.frame_count, false);
  mask.frame_energy_db.resize(grid.frame_count);
  std::vector<double> audible;
  for (std::size_t n = 0; n < grid.frame_count; ++n) {
    const std::ptrdiff_t start = grid.frame_start(n);
    double sum = 0.0;
    for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, start);
         i < std::min(len, start + static_cast<std::ptrdiff_t>(grid.window)); ++i) {
      sum += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    const double rms = std::sqrt(sum / static_cast<double>(grid.window));
    silent[n] = rms <= config.silence_rms;
    mask.frame_energy_db[n] = 20.0 * std::log10(std::max(rms, 1e-300));
    if (!silent[n]) audible.push_back(mask.frame_energy_db[n]);
  }

  std::vector<bool> raw(grid.frame_count, false);
  if (!audible.empty()) {
    const auto [lo, hi] = std::minmax_element(audible.begin(), audible.end());
    const double relative = percentile(audible, config.noise_percentile) + config.margin_db;
    // A floor that no frame can clear means there was no noise-only stretch to measure.
    if (*hi - *lo <= config.degenerate_spread_db || *hi <= relative) {
      mask.threshold_db = config.absolute_floor_dbfs;
    } else {
      mask.threshold_db = relative;
    }
    for (std::size_t n = 0; n < grid.frame_count; ++n) {
      raw[n] = !silent[n] && mask.frame_energy_db[n] > mask.threshold_db;
    }
  }

  mask.frame_flags.assign(grid.frame_count, false);
  int hang = 0;
  for (std::size_t n = 0; n < grid.frame_count; ++n) {
    if (raw[n]) {
      mask.frame_flags[n] = true;
      hang = config.hangover_frames;
    } else if (hang > 0) {
      mask.frame_flags[n] = true;
      --hang;
    }
  }

  for (std::size_t n = 0; n < grid.frame_count; ++n) {
    if (!mask.frame_flags[n]) continue;
    const std::ptrdiff_t start = grid.frame_start(n);
    const std::ptrdiff_t end = std::min(len, start + static_cast<std::ptrdiff_t>(grid.window));
    for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, start); i < end; ++i) {
      mask.sample_flags[static_cast<std::size_t>(i)] = true;
    }
  }
  return mask;
}

MonoSignal extract_voiced(const MonoSignal& signal, const VoiceMask& mask) {
  if (mask.sample_flags.size() != signal.size()) {
    throw Error(Errc::kDimensionMismatch, "voice mask was built for a different signal length");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    if (mask.sample_flags[i]) out.push_back(signal[i]);
  }
  if (out.empty()) throw Error(Errc::kNoVoicedSamples, "no voiced samples");
  return MonoSignal(std::move(out), signal.sample_rate());
}

}  // namespace tegg
