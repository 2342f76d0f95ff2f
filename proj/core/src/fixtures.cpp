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

#include "tegg/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "tegg/error.hpp"
#include "tegg/lpc.hpp"

namespace tegg {

MonoSignal synth_glottal_source(double f0, double duration_s, int sample_rate,
                                PulseShape shape) {
  if (!(f0 > 0.0) || !(f0 < sample_rate / 4.0)) {
    throw Error(Errc::kInvalidArgument,
                "f0 must be in (0, sample_rate / 4), got " + std::to_string(f0));
  }
  if (!(duration_s >= 0.0)) throw Error(Errc::kInvalidArgument, "duration must be >= 0");
  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
  const double period = sample_rate / f0;
  std::vector<double> out(n, 0.0);

  if (shape == PulseShape::kImpulseTrain) {
    for (std::size_t k = 0;; ++k) {
      const auto pos = static_cast<std::size_t>(std::llround(static_cast<double>(k) * period));
      if (pos >= n) break;
      out[pos] = 1.0;
    }
    return MonoSignal(std::move(out), sample_rate);
  }

  const double open = kRosenbergOpenFraction * period;
  const double close = kRosenbergCloseFraction * period;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::fmod(static_cast<double>(i), period);
    if (t < open) {
      out[i] = 0.5 * (1.0 - std::cos(std::numbers::pi * t / open));
    } else if (t < open + close) {
      out[i] = std::cos(0.5 * std::numbers::pi * (t - open) / close);
    }
  }
  return MonoSignal(std::move(out), sample_rate);
}

double FormantTrack::total_ms() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration_ms;
  return t;
}

void FormantTrack::validate(int sample_rate) const {
  for (const auto& s : segments) {
    if (!(s.duration_ms > 0.0)) {
      throw Error(Errc::kInvalidArgument, "formant segment durations must be positive");
    }
    for (const auto& r : s.resonances) {
      if (!(r.center_hz > 0.0) || !(r.center_hz < sample_rate / 2.0)) {
        throw Error(Errc::kInvalidArgument,
                    "resonance at " + std::to_string(r.center_hz) + " Hz is not below Nyquist");
      }
      if (!(r.bandwidth_hz > 0.0)) {
        throw Error(Errc::kInvalidArgument, "resonance bandwidths must be positive");
      }
    }
  }
}

FormantTrack FormantTrack::stationary(std::vector<Resonance> resonances,
                                      double duration_ms) {
  return FormantTrack{{FormantSegment{duration_ms, std::move(resonances)}}};
}

FormantTrack FormantTrack::alternating(std::vector<Resonance> first,
                                       std::vector<Resonance> second,
                                       double segment_ms, double duration_ms) {
  FormantTrack track;
  double t = 0.0;
  for (std::size_t k = 0; t < duration_ms; ++k) {
    const double d = std::min(segment_ms, duration_ms - t);
    track.segments.push_back({d, k % 2 == 0 ? first : second});
    t += d;
  }
  return track;
}

std::vector<double> resonator_denominator(const std::vector<Resonance>& resonances,
                                          int sample_rate) {
  std::vector<std::complex<double>> poles;
  for (const auto& r : resonances) {
    const double radius = std::exp(-std::numbers::pi * r.bandwidth_hz / sample_rate);
    const double angle = 2.0 * std::numbers::pi * r.center_hz / sample_rate;
    poles.push_back(std::polar(radius, angle));
    poles.push_back(std::polar(radius, -angle));
  }
  return polynomial_from_roots(poles);
}

MagnitudeResponse resonator_magnitude(const std::vector<Resonance>& resonances,
                                      int synth_rate, std::size_t grid_size,
                                      int grid_rate) {
  const std::vector<double> a = resonator_denominator(resonances, synth_rate);
  std::vector<double> mag(grid_size / 2 + 1);
  for (std::size_t k = 0; k < mag.size(); ++k) {
    const double f = static_cast<double>(k) * grid_rate / static_cast<double>(grid_size);
    const double w = 2.0 * std::numbers::pi * f / synth_rate;
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc += a[i] * std::polar(1.0, -w * static_cast<double>(i));
    }
    mag[k] = 1.0 / std::abs(acc);
  }
  return MagnitudeResponse(std::move(mag), grid_size, grid_rate);
}

MonoSignal synth_speech(const MonoSignal& source, const FormantTrack& track) {
  const int rate = source.sample_rate();
  track.validate(rate);
  const double source_ms = source.duration_seconds() * 1000.0;
  if (track.segments.empty() || track.total_ms() + 1000.0 / rate < source_ms) {
    throw Error(Errc::kInvalidArgument, "formant track does not cover the source duration");
  }

  const std::size_t n = source.size();
  const double half_fade = 0.5 * kSegmentCrossfadeMs * rate / 1000.0;
  std::vector<double> out(n, 0.0);
  double seg_start = 0.0;
  for (std::size_t s = 0; s < track.segments.size(); ++s) {
    const auto& seg = track.segments[s];
    const double seg_end = seg_start + seg.duration_ms * rate / 1000.0;
    const bool first = s == 0;
    const bool last = s + 1 == track.segments.size();
    // Weight ramps linearly across each boundary; the first and last
    // segments extend to the ends of the signal.
    const double lo = first ? -1e300 : seg_start - half_fade;
    const double hi = last ? 1e300 : seg_end + half_fade;
    const auto stop = static_cast<std::size_t>(
        std::clamp(std::ceil(hi), 0.0, static_cast<double>(n)));
    if (stop == 0 || lo >= static_cast<double>(n)) {
      seg_start = seg_end;
      continue;
    }
    const std::vector<double> a = resonator_denominator(seg.resonances, rate);
    const std::vector<double> y = all_pole_filter(source.samples().first(stop), a);
    for (std::size_t i = 0; i < stop; ++i) {
      const double t = static_cast<double>(i);
      double w = 1.0;
      if (!first) w = std::min(w, (t - lo) / (2.0 * half_fade));
      if (!last) w = std::min(w, (hi - t) / (2.0 * half_fade));
      if (w > 0.0) out[i] += std::min(w, 1.0) * y[i];
    }
    seg_start = seg_end;
  }
  return MonoSignal(std::move(out), rate);
}

std::vector<Resonance> neutral_vowel() {
  return {{500.0, 80.0}, {1500.0, 100.0}, {2500.0, 120.0}};
}

MonoSignal lip_radiate(const MonoSignal& source, double coefficient_16k) {
  if (!(coefficient_16k > 0.0) || !(coefficient_16k < 1.0)) {
    throw Error(Errc::kInvalidArgument, "lip radiation coefficient must lie in (0, 1)");
  }
  const double d = std::pow(coefficient_16k, 16000.0 / source.sample_rate());
  const auto x = source.samples();
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - (i > 0 ? d * x[i - 1] : 0.0);
  return MonoSignal(std::move(y), source.sample_rate());
}

StereoRecording make_fixture(const FixtureSpec& spec) {
  MonoSignal source = synth_glottal_source(spec.f0, spec.duration_s, spec.sample_rate, spec.shape);
  auto& src = source.mutable_samples();
  const std::size_t n = src.size();
  const std::size_t lead = ms_to_samples(spec.lead_silence_ms, spec.sample_rate);
  const std::size_t trail = ms_to_samples(spec.trail_silence_ms, spec.sample_rate);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < lead || i + trail >= n) {
      src[i] = 0.0;
      continue;
    }
    if (spec.am_depth > 0.0) {
      const double t = static_cast<double>(i) / spec.sample_rate;
      src[i] *= 1.0 - spec.am_depth * 0.5 *
                          (1.0 - std::cos(2.0 * std::numbers::pi * spec.am_rate_hz * t));
    }
  }

  const FormantTrack track = spec.track.segments.empty()
                                 ? FormantTrack::stationary(neutral_vowel(), spec.duration_s * 1000.0)
                                 : spec.track;
  if (spec.lip_radiation) source = lip_radiate(source);
  MonoSignal speech = synth_speech(source, track);
  const double sp = speech.peak();
  if (sp > 0.0) speech = speech.scaled(spec.speech_peak / sp);
  if (spec.noise_dbfs > -200.0) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> noise(0.0, std::pow(10.0, spec.noise_dbfs / 20.0));
    for (double& v : speech.mutable_samples()) v += noise(rng);
  }
  const double ep = source.peak();
  MonoSignal egg = ep > 0.0 ? source.scaled(spec.egg_peak / ep) : source;
  return StereoRecording(std::move(speech), std::move(egg));
}

}  // namespace tegg
