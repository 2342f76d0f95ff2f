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

#include "tegg/stft.hpp"

#include <string>

#include "tegg/error.hpp"
#include "tegg/fft.hpp"

namespace tegg {

Spectrogram::Spectrogram(FrameSpec spec, std::size_t fft_size,
                         std::size_t frames, std::size_t signal_length)
    : spec_(spec),
      fft_size_(fft_size),
      frames_(frames),
      signal_length_(signal_length),
      data_((fft_size / 2 + 1) * frames) {}

std::size_t default_fft_size(const FrameSpec& spec) {
  return next_power_of_two(spec.window_length());
}

Spectrogram stft(const MonoSignal& signal, const FrameSpec& spec,
                 std::size_t fft_size) {
  if (!is_power_of_two(fft_size) || fft_size < spec.window_length()) {
    throw Error(Errc::kInvalidArgument,
                "FFT size " + std::to_string(fft_size) +
                    " must be a power of two no smaller than the window");
  }
  const auto frames = frame_signal(signal, spec);
  Spectrogram out(spec, fft_size, frames.size(), signal.size());
  RealFft fft(fft_size);
  for (std::size_t n = 0; n < frames.size(); ++n) {
    fft.forward(frames[n], out.column(n));
  }
  return out;
}

MonoSignal istft(const Spectrogram& spectrogram) {
  if (spectrogram.frames() == 0) {
    throw Error(Errc::kEmptySignal, "cannot invert an empty spectrogram");
  }
  const FrameSpec& spec = spectrogram.spec();
  const FrameGrid grid = FrameGrid::plan(spectrogram.signal_length(), spec);
  if (grid.frame_count != spectrogram.frames()) {
    throw Error(Errc::kDimensionMismatch,
                "spectrogram frame count does not match its frame spec");
  }

  const std::vector<double> window = make_window(spec.window_kind, grid.window);
  std::vector<double> acc(grid.padded_length, 0.0);
  std::vector<double> weight(grid.padded_length, 0.0);
  std::vector<double> frame(spectrogram.fft_size());
  RealFft fft(spectrogram.fft_size());
  for (std::size_t n = 0; n < grid.frame_count; ++n) {
    fft.inverse(spectrogram.column(n), frame);
    const std::size_t at = n * grid.hop;
    for (std::size_t k = 0; k < grid.window; ++k) {
      acc[at + k] += window[k] * frame[k];
      weight[at + k] += window[k] * window[k];
    }
  }

  std::vector<double> out(grid.signal_length);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = i + grid.pad_front;
    out[i] = weight[j] > 0.0 ? acc[j] / weight[j] : 0.0;
  }
  return MonoSignal(std::move(out), spec.sample_rate);
}

}  // namespace tegg
