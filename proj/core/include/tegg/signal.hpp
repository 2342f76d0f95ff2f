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

#ifndef TEGG_SIGNAL_HPP_
#define TEGG_SIGNAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace tegg {

// A sampled mono waveform. Full scale is +/-1.0. Construction validates that
// the rate is positive and every sample is finite.
class MonoSignal {
 public:
  MonoSignal() = default;
  MonoSignal(std::vector<double> samples, int sample_rate);

  std::span<const double> samples() const { return samples_; }
  std::vector<double>& mutable_samples() { return samples_; }
  int sample_rate() const { return sample_rate_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration_seconds() const;
  double operator[](std::size_t i) const { return samples_[i]; }

  // Largest absolute sample value, 0 for an empty signal.
  double peak() const;

  MonoSignal scaled(double gain) const;

 private:
  std::vector<double> samples_;
  int sample_rate_ = 1;
};

// Sample-synchronized speech and EGG channels of one take.
struct StereoRecording {
  MonoSignal speech;
  MonoSignal egg;

  StereoRecording() = default;
  StereoRecording(MonoSignal speech_channel, MonoSignal egg_channel);
};

MonoSignal pad_silence(const MonoSignal& signal, double lead_ms = 50.0,
                       double trail_ms = 50.0);

// Scales so that max |sample| == 10^(target_dbfs / 20).
MonoSignal peak_normalize(const MonoSignal& signal, double target_dbfs = -1.0);

// Samples spanned by a duration at a given rate, rounded to nearest.
std::size_t ms_to_samples(double ms, int sample_rate);

}  // namespace tegg

#endif  // TEGG_SIGNAL_HPP_
