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

#include "tegg/cross_filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "tegg/error.hpp"
#include "tegg/fft.hpp"
#include "tegg/iir.hpp"

namespace tegg {
namespace {

constexpr std::size_t kDirectConvolutionLimit = 1u << 16;

}  // namespace

MonoSignal convolve(const MonoSignal& g, const MonoSignal& h) {
  if (g.empty() || h.empty()) {
    throw Error(Errc::kEmptySignal, "cannot convolve an empty signal");
  }
  if (g.sample_rate() != h.sample_rate()) {
    throw Error(Errc::kInvalidArgument, "convolution operands differ in sample rate");
  }
  const auto gs = g.samples();
  const auto hs = h.samples();
  const std::size_t n = gs.size();
  const std::size_t m = std::min(hs.size(), n);
  std::vector<double> out(n, 0.0);

  if (n * m <= kDirectConvolutionLimit) {
    for (std::size_t t = 0; t < n; ++t) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m && k <= t; ++k) acc += hs[k] * gs[t - k];
      out[t] = acc;
    }
    return MonoSignal(std::move(out), g.sample_rate());
  }

  // Overlap-add with blocks sized so each FFT is a few times the filter.
  const std::size_t nfft = next_power_of_two(4 * m);
  const std::size_t block = nfft - m + 1;
  RealFft fft(nfft);
  std::vector<std::complex<double>> hspec(fft.bins()), xspec(fft.bins());
  fft.forward(hs.first(m), hspec);
  std::vector<double> seg(nfft);
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t len = std::min(block, n - start);
    fft.forward(gs.subspan(start, len), xspec);
    for (std::size_t k = 0; k < xspec.size(); ++k) xspec[k] *= hspec[k];
    fft.inverse(xspec, seg);
    const std::size_t valid = std::min(nfft, n - start);
    for (std::size_t i = 0; i < valid; ++i) out[start + i] += seg[i];
  }
  return MonoSignal(std::move(out), g.sample_rate());
}

std::size_t ModulationVector::guarded() const {
  return static_cast<std::size_t>(std::count(guard_mask.begin(), guard_mask.end(), true));
}

Envelope energy_envelope(const Spectrogram& spectrogram) {
  Envelope e;
  e.values.resize(spectrogram.frames());
  for (std::size_t n = 0; n < spectrogram.frames(); ++n) {
    double acc = 0.0;
    for (const auto& v : spectrogram.column(n)) acc += std::abs(v);
    e.values[n] = acc;
  }
  return e;
}

ModulationVector modulation_ratio(const Envelope& e_s, const Envelope& e_y,
                                  double epsilon, double r_max) {
  if (e_s.values.size() != e_y.values.size()) {
    throw Error(Errc::kDimensionMismatch,
                "envelope lengths differ: " + std::to_string(e_s.values.size()) + " vs " +
                    std::to_string(e_y.values.size()));
  }
  ModulationVector r;
  r.values.resize(e_s.values.size(), 0.0);
  r.guard_mask.resize(e_s.values.size(), false);
  for (std::size_t n = 0; n < r.values.size(); ++n) {
    if (e_y.values[n] > epsilon) {
      r.values[n] = std::min(e_s.values[n] / e_y.values[n], r_max);
    } else {
      r.guard_mask[n] = true;
    }
  }
  return r;
}

Spectrogram apply_ratio(const Spectrogram& y, const ModulationVector& r) {
  if (r.values.size() != y.frames()) {
    throw Error(Errc::kDimensionMismatch,
                "modulation vector has " + std::to_string(r.values.size()) +
                    " entries for " + std::to_string(y.frames()) + " frames");
  }
  Spectrogram z = y;
  for (std::size_t n = 0; n < z.frames(); ++n) {
    for (auto& v : z.column(n)) v *= r.values[n];
  }
  return z;
}

double estimate_f0(const MonoSignal& signal, const VoiceMask& mask,
                   const F0Search& search) {
  if (mask.sample_flags.size() != signal.size()) {
    throw Error(Errc::kDimensionMismatch, "voice mask was built for a different signal length");
  }
  if (mask.voiced_frames() == 0) {
    throw Error(Errc::kCannotEstimateF0, "cannot estimate f0: no voiced frames");
  }
  const double fs = signal.sample_rate();
  const auto min_lag = static_cast<std::size_t>(std::floor(fs / search.max_hz));
  const auto max_lag = static_cast<std::size_t>(std::ceil(fs / search.min_hz));
  const std::size_t seg_len = std::max(mask.spec.window_length(), 2 * max_lag);
  const FrameGrid grid = FrameGrid::plan(signal.size(), mask.spec);
  const auto x = signal.samples();
  const auto len = static_cast<std::ptrdiff_t>(x.size());

  std::vector<double> seg(seg_len), corr(max_lag + 2, 0.0);
  std::vector<double> estimates;
  for (std::size_t n = 0; n < mask.frame_flags.size(); ++n) {
    if (!mask.frame_flags[n]) continue;
    const std::ptrdiff_t center = grid.frame_start(n) + static_cast<std::ptrdiff_t>(grid.window / 2);
    const std::ptrdiff_t start = center - static_cast<std::ptrdiff_t>(seg_len / 2);
    for (std::size_t i = 0; i < seg_len; ++i) {
      const std::ptrdiff_t j = start + static_cast<std::ptrdiff_t>(i);
      seg[i] = (j >= 0 && j < len) ? x[static_cast<std::size_t>(j)] : 0.0;
    }

    double best = -1.0;
    for (std::size_t lag = min_lag; lag <= max_lag + 1 && lag < seg_len; ++lag) {
      double xy = 0.0, xx = 0.0, yy = 0.0;
      for (std::size_t i = 0; i + lag < seg_len; ++i) {
        xy += seg[i] * seg[i + lag];
        xx += seg[i] * seg[i];
        yy += seg[i + lag] * seg[i + lag];
      }
      corr[lag] = (xx > 0.0 && yy > 0.0) ? xy / std::sqrt(xx * yy) : 0.0;
      if (lag <= max_lag) best = std::max(best, corr[lag]);
    }
    if (best < search.min_correlation) continue;

    // Shortest-lag local peak close to the best one, to avoid sub-octave picks.
    std::size_t pick = 0;
    for (std::size_t lag = std::max<std::size_t>(min_lag, 1); lag <= max_lag && lag + 1 < seg_len; ++lag) {
      const bool peak = corr[lag] >= corr[lag - 1] && corr[lag] >= corr[lag + 1];
      if (peak && corr[lag] >= 0.9 * best) {
        pick = lag;
        break;
      }
    }
    if (pick == 0) continue;
    double refined = static_cast<double>(pick);
    const double c0 = corr[pick - 1], c1 = corr[pick], c2 = corr[pick + 1];
    const double denom = c0 - 2.0 * c1 + c2;
    if (denom < 0.0) refined += 0.5 * (c0 - c2) / denom;
    estimates.push_back(fs / refined);
  }
  if (estimates.empty()) {
    throw Error(Errc::kCannotEstimateF0, "cannot estimate f0: no periodic voiced frame");
  }
  std::sort(estimates.begin(), estimates.end());
  const std::size_t mid = estimates.size() / 2;
  return estimates.size() % 2 == 1 ? estimates[mid]
                                   : 0.5 * (estimates[mid - 1] + estimates[mid]);
}

double egg_highpass_cutoff(double f0) { return f0 - kEggHighpassOffsetHz; }

MonoSignal adaptive_highpass_egg(const MonoSignal& g, double f0) {
  if (!(f0 > 25.0)) {
    throw Error(Errc::kInvalidArgument,
                "f0 must exceed 25 Hz for the EGG high-pass, got " + std::to_string(f0));
  }
  const double cutoff = egg_highpass_cutoff(f0);
  const SosFilter hp = chebyshev1_highpass(kEggHighpassOrder, kEggHighpassRippleDb, cutoff,
                                           g.sample_rate());
  const auto pad = static_cast<std::size_t>(std::ceil(3.0 * g.sample_rate() / cutoff));
  return MonoSignal(hp.filtfilt(g.samples(), pad), g.sample_rate());
}

CrossSynthesis cross_synthesize(const MonoSignal& speech, const MonoSignal& egg,
                                const MonoSignal& h, const FrameSpec& spec,
                                double guard_relative, double r_max) {
  if (speech.size() != egg.size() || speech.sample_rate() != egg.sample_rate()) {
    throw Error(Errc::kDimensionMismatch, "speech and EGG are not sample-synchronized");
  }
  CrossSynthesis out;
  out.filtered_source = convolve(egg, h);
  const std::size_t nfft = default_fft_size(spec);
  const Spectrogram s_spec = stft(speech, spec, nfft);
  const Spectrogram y_spec = stft(out.filtered_source, spec, nfft);
  out.speech_envelope = energy_envelope(s_spec);
  out.source_envelope = energy_envelope(y_spec);

  const auto& ey = out.source_envelope.values;
  const double peak = ey.empty() ? 0.0 : *std::max_element(ey.begin(), ey.end());
  if (!(peak > 0.0)) {
    throw Error(Errc::kSilentEgg, "silent EGG channel: every frame of the filtered source is zero");
  }
  out.ratio = modulation_ratio(out.speech_envelope, out.source_envelope,
                               guard_relative * peak, r_max);
  out.output_spectrogram = apply_ratio(y_spec, out.ratio);
  out.output = istft(out.output_spectrogram);
  return out;
}

}  // namespace tegg
