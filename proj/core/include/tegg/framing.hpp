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

#ifndef TEGG_FRAMING_HPP_
#define TEGG_FRAMING_HPP_

#include <cstddef>
#include <vector>

#include "tegg/signal.hpp"

namespace tegg {

enum class WindowKind { kPeriodicHamming, kPeriodicHann, kRectangular };

// Analysis grid shared by the VAD, LPC and STFT stages. The window length
// must be an integer multiple of the hop so that the window satisfies
// constant overlap-add.
struct FrameSpec {
  double window_ms = 20.0;
  double overlap_fraction = 0.5;
  WindowKind window_kind = WindowKind::kPeriodicHamming;
  int sample_rate = 16000;

  FrameSpec() = default;
  FrameSpec(double window_ms, double overlap_fraction, int sample_rate,
            WindowKind kind = WindowKind::kPeriodicHamming);

  std::size_t window_length() const;
  std::size_t hop() const;

  // Throws Errc::kInvalidArgument if any invariant is violated.
  void validate() const;

  FrameSpec at_rate(int rate) const;
  FrameSpec with_window(WindowKind kind) const;
};

std::vector<double> make_window(WindowKind kind, std::size_t length);

// Sum of overlapped window values at any sample of the fully covered span.
double overlap_add_constant(const FrameSpec& spec);

// Placement of frames over a signal of a given length. The signal is
// zero-padded by (window - hop) in front and enough at the back that every
// original sample is covered by window/hop frames.
struct FrameGrid {
  std::size_t signal_length = 0;
  std::size_t window = 0;
  std::size_t hop = 0;
  std::size_t pad_front = 0;
  std::size_t padded_length = 0;
  std::size_t frame_count = 0;

  static FrameGrid plan(std::size_t signal_length, const FrameSpec& spec);

  // First sample of frame n in original coordinates (may be negative).
  std::ptrdiff_t frame_start(std::size_t n) const {
    return static_cast<std::ptrdiff_t>(n * hop) -
           static_cast<std::ptrdiff_t>(pad_front);
  }
};

// Frames of the zero-padded signal, each multiplied by the FrameSpec window.
std::vector<std::vector<double>> frame_signal(const MonoSignal& signal,
                                              const FrameSpec& spec);

}  // namespace tegg

#endif  // TEGG_FRAMING_HPP_
