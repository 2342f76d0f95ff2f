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

#include "tegg/framing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tegg/error.hpp"

namespace tegg {

FrameSpec::FrameSpec(double window_ms_in, double overlap_in, int rate,
                     WindowKind kind)
    : window_ms(window_ms_in),
      overlap_fraction(overlap_in),
      window_kind(kind),
      sample_rate(rate) {
  validate();
}

std::size_t FrameSpec::window_length() const {
  return static_cast<std::size_t>(std::llround(window_ms * sample_rate / 1000.0));
}

std::size_t FrameSpec::hop() const {
  return static_cast<std::size_t>(
      std::llround(static_cast<double>(window_length()) * (1.0 - overlap_fraction)));
}

void FrameSpec::validate() const {
  if (sample_rate <= 0) {
    throw Error(Errc::kInvalidArgument, "frame sample rate must be positive");
  }
  if (!(overlap_fraction > 0.0) || !(overlap_fraction < 1.0)) {
    throw Error(Errc::kInvalidArgument, "overlap fraction must be in (0, 1)");
  }
  const double exact_window = window_ms * sample_rate / 1000.0;
  const std::size_t win = window_length();
  if (win < 2 || std::abs(exact_window - static_cast<double>(win)) > 1e-6) {
    throw Error(Errc::kInvalidArgument,
                "window of " + std::to_string(window_ms) + " ms is not a whole number (>= 2) of samples at " +
                    std::to_string(sample_rate) + " Hz");
  }
  const double exact_hop = static_cast<double>(win) * (1.0 - overlap_fraction);
  const std::size_t h = hop();
  if (h == 0 || std::abs(exact_hop - static_cast<double>(h)) > 1e-6) {
    throw Error(Errc::kInvalidArgument, "hop is not a whole number of samples");
  }
  if (win % h != 0) {
    throw Error(Errc::kInvalidArgument,
                "window length must be a multiple of the hop for constant overlap-add");
  }
}

FrameSpec FrameSpec::at_rate(int rate) const {
  return FrameSpec(window_ms, overlap_fraction, rate, window_kind);
}

FrameSpec FrameSpec::with_window(WindowKind kind) const {
  FrameSpec s = *this;
  s.window_kind = kind;
  return s;
}

std::vector<double> make_window(WindowKind kind, std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (kind == WindowKind::kRectangular) return w;
  const double a0 = kind == WindowKind::kPeriodicHamming ? 0.54 : 0.5;
  for (std::size_t n = 0; n < length; ++n) {
    w[n] = a0 - (1.0 - a0) * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                      static_cast<double>(length));
  }
  return w;
}

double overlap_add_constant(const FrameSpec& spec) {
  const double overlaps =
      static_cast<double>(spec.window_length()) / static_cast<double>(spec.hop());
  switch (spec.window_kind) {
    case WindowKind::kPeriodicHamming: return 0.54 * overlaps;
    case WindowKind::kPeriodicHann: return 0.5 * overlaps;
    case WindowKind::kRectangular: break;
  }
  return overlaps;
}

FrameGrid FrameGrid::plan(std::size_t signal_length, const FrameSpec& spec) {
  spec.validate();
  FrameGrid g;
  g.signal_length = signal_length;
  g.window = spec.window_length();
  g.hop = spec.hop();
  if (signal_length < g.window) {
    throw Error(Errc::kSignalTooShort,
                "signal of " + std::to_string(signal_length) +
                    " samples is shorter than one window (" + std::to_string(g.window) + ")");
  }
  g.pad_front = g.window - g.hop;
  // Last frame index that still covers the final sample.
  const std::size_t last = (signal_length - 1 + g.pad_front) / g.hop;
  g.frame_count = last + 1;
  g.padded_length = last * g.hop + g.window;
  return g;
}

std::vector<std::vector<double>> frame_signal(const MonoSignal& signal,
                                              const FrameSpec& spec) {
  if (signal.sample_rate() != spec.sample_rate) {
    throw Error(Errc::kInvalidArgument, "signal rate does not match frame spec rate");
  }
  const FrameGrid grid = FrameGrid::plan(signal.size(), spec);
  const std::vector<double> window = make_window(spec.window_kind, grid.window);
  const auto x = signal.samples();
  const auto len = static_cast<std::ptrdiff_t>(x.size());

  std::vector<std::vector<double>> frames(grid.frame_count,
                                          std::vector<double>(grid.window, 0.0));
  for (std::size_t n = 0; n < grid.frame_count; ++n) {
    const std::ptrdiff_t start = grid.frame_start(n);
    for (std::size_t k = 0; k < grid.window; ++k) {
      const std::ptrdiff_t i = start + static_cast<std::ptrdiff_t>(k);
      if (i >= 0 && i < len) frames[n][k] = x[static_cast<std::size_t>(i)] * window[k];
    }
  }
  return frames;
}

}  // namespace tegg
