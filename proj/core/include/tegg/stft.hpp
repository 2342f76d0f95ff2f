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

#ifndef TEGG_STFT_HPP_
#define TEGG_STFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tegg/framing.hpp"
#include "tegg/signal.hpp"

namespace tegg {

// One-sided complex time-frequency matrix: bins() rows by frames() columns,
// stored column-major so each frame is contiguous.
class Spectrogram {
 public:
  Spectrogram() = default;
  Spectrogram(FrameSpec spec, std::size_t fft_size, std::size_t frames,
              std::size_t signal_length);

  std::size_t bins() const { return fft_size_ / 2 + 1; }
  std::size_t frames() const { return frames_; }
  std::size_t fft_size() const { return fft_size_; }
  std::size_t signal_length() const { return signal_length_; }
  const FrameSpec& spec() const { return spec_; }

  std::span<std::complex<double>> column(std::size_t n) {
    return {data_.data() + n * bins(), bins()};
  }
  std::span<const std::complex<double>> column(std::size_t n) const {
    return {data_.data() + n * bins(), bins()};
  }
  std::complex<double>& at(std::size_t bin, std::size_t frame) {
    return data_[frame * bins() + bin];
  }
  const std::complex<double>& at(std::size_t bin, std::size_t frame) const {
    return data_[frame * bins() + bin];
  }

 private:
  FrameSpec spec_;
  std::size_t fft_size_ = 0;
  std::size_t frames_ = 0;
  std::size_t signal_length_ = 0;
  std::vector<std::complex<double>> data_;
};

// Smallest power of two that holds one FrameSpec window.
std::size_t default_fft_size(const FrameSpec& spec);

// Column n is the one-sided FFT of windowed frame n from frame_signal.
Spectrogram stft(const MonoSignal& signal, const FrameSpec& spec,
                 std::size_t fft_size);

// Least-squares overlap-add: each inverse column is weighted by the window
// again and the sum is divided by the sliding sum of squared window values,
// then trimmed back to the original signal length.
MonoSignal istft(const Spectrogram& spectrogram);

}  // namespace tegg

#endif  // TEGG_STFT_HPP_
