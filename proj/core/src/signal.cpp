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

#include "tegg/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tegg/error.hpp"

namespace tegg {

MonoSignal::MonoSignal(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ <= 0) {
    throw Error(Errc::kInvalidArgument,
                "sample rate must be positive, got " +
                    std::to_string(sample_rate_));
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) {
      throw Error(Errc::kInvalidArgument, "signal contains non-finite samples");
    }
  }
}

double MonoSignal::duration_seconds() const {
  return static_cast<double>(samples_.size()) / sample_rate_;
}

double MonoSignal::peak() const {
  double p = 0.0;
  for (double v : samples_) p = std::max(p, std::abs(v));
  return p;
}

MonoSignal MonoSignal::scaled(double gain) const {
  std::vector<double> out(samples_);
  for (double& v : out) v *= gain;
  return MonoSignal(std::move(out), sample_rate_);
}

StereoRecording::StereoRecording(MonoSignal speech_channel,
                                 MonoSignal egg_channel)
    : speech(std::move(speech_channel)), egg(std::move(egg_channel)) {
  if (speech.sample_rate() != egg.sample_rate()) {
    throw Error(Errc::kDimensionMismatch,
                "speech and EGG channels have different sample rates");
  }
  if (speech.size() != egg.size()) {
    throw Error(Errc::kDimensionMismatch,
                "speech and EGG channels have different lengths");
  }
}

std::size_t ms_to_samples(double ms, int sample_rate) {
  return static_cast<std::size_t>(std::llround(ms * sample_rate / 1000.0));
}

MonoSignal pad_silence(const MonoSignal& signal, double lead_ms,
                       double trail_ms) {
  if (lead_ms < 0.0 || trail_ms < 0.0) {
    throw Error(Errc::kInvalidArgument, "padding durations must be >= 0");
  }
  const std::size_t lead = ms_to_samples(lead_ms, signal.sample_rate());
  const std::size_t trail = ms_to_samples(trail_ms, signal.sample_rate());
  std::vector<double> out(lead + signal.size() + trail, 0.0);
  std::copy(signal.samples().begin(), signal.samples().end(),
            out.begin() + static_cast<std::ptrdiff_t>(lead));
  return MonoSignal(std::move(out), signal.sample_rate());
}

MonoSignal peak_normalize(const MonoSignal& signal, double target_dbfs) {
  const double peak = signal.peak();
  if (peak == 0.0) {
    throw Error(Errc::kSilentSignal, "cannot normalize an all-zero signal");
  }
  const double target = std::pow(10.0, target_dbfs / 20.0);
  if (std::abs(peak - target) <= 1e-12 * target) return signal;
  return signal.scaled(target / peak);
}

}  // namespace tegg
