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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tegg/fixtures.hpp"
#include "tegg/lpc.hpp"
#include "tegg/resample.hpp"

namespace tegg {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(GlottalSource, ImpulseTrainSpacing) {
  const auto g = synth_glottal_source(100.0, 1.0, 16000, PulseShape::kImpulseTrain);
  ASSERT_EQ(g.size(), 16000u);
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0.0) at.push_back(i);
  }
  ASSERT_EQ(at.size(), 100u);
  for (std::size_t k = 1; k < at.size(); ++k) EXPECT_EQ(at[k] - at[k - 1], 160u);
}

TEST(GlottalSource, LengthFollowsDuration) {
  EXPECT_EQ(synth_glottal_source(120.0, 0.5, 48000).size(), 24000u);
  EXPECT_EQ(synth_glottal_source(120.0, 0.0, 48000).size(), 0u);
}

TEST(GlottalSource, ExactlyPeriodic) {
  const auto g = synth_glottal_source(100.0, 1.0, 16000, PulseShape::kImpulseTrain);
  EXPECT_GE(oracle::autocorr(g.samples(), 160), 0.99);
  const auto r = synth_glottal_source(150.0, 1.0, 48000, PulseShape::kRosenberg);
  EXPECT_GE(oracle::autocorr(r.samples(), 320), 0.99);
}

TEST(GlottalSource, RosenbergPhases) {
  const auto g = synth_glottal_source(100.0, 0.01, 48000, PulseShape::kRosenberg);
  // One 480-sample period: rising for 60%, falling for 30%, closed for the rest.
  const std::size_t open = 288, close = 144;
  EXPECT_EQ(g[0], 0.0);
  for (std::size_t i = 1; i < open; ++i) EXPECT_GE(g[i], g[i - 1]) << i;
  for (std::size_t i = open + 1; i < open + close; ++i) EXPECT_LE(g[i], g[i - 1]) << i;
  for (std::size_t i = open + close + 1; i < 480; ++i) EXPECT_EQ(g[i], 0.0) << i;
  EXPECT_NEAR(*std::max_element(g.samples().begin(), g.samples().end()), 1.0, 1e-3);
}

TEST(GlottalSource, RejectsBadPitch) {
  EXPECT_TEGG_ERROR(synth_glottal_source(0.0, 1.0, 16000), Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(synth_glottal_source(4000.0, 1.0, 16000), Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(synth_glottal_source(-5.0, 1.0, 16000), Errc::kInvalidArgument);
}

TEST(ResonatorDenominator, PolesWhereDesigned) {
  const auto a = resonator_denominator({{700, 100}, {2300, 80}}, 16000);
  ASSERT_EQ(a.size(), 5u);
  const auto r = oracle::roots(a);
  std::vector<double> angles, radii;
  for (const auto& z : r) {
    if (z.imag() > 0) {
      angles.push_back(std::arg(z));
      radii.push_back(std::abs(z));
    }
  }
  ASSERT_EQ(angles.size(), 2u);
  if (angles[0] > angles[1]) {
    std::swap(angles[0], angles[1]);
    std::swap(radii[0], radii[1]);
  }
  EXPECT_NEAR(angles[0], 2 * kPi * 700 / 16000, 1e-9);
  EXPECT_NEAR(angles[1], 2 * kPi * 2300 / 16000, 1e-9);
  EXPECT_NEAR(radii[0], std::exp(-kPi * 100 / 16000), 1e-9);
  EXPECT_NEAR(radii[1], std::exp(-kPi * 80 / 16000), 1e-9);
}

TEST(SynthSpeech, PeaksAtResonances) {
  const auto g = synth_glottal_source(100.0, 1.0, 16000, PulseShape::kImpulseTrain);
  const auto s = synth_speech(g, FormantTrack::stationary({{700, 100}, {1200, 100}}, 1000));
  const std::span<const double> seg(s.samples().data() + 4000, 4096);
  std::vector<double> w(seg.begin(), seg.end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= 0.5 - 0.5 * std::cos(2 * kPi * i / 4096);
  const auto spec = oracle::naive_dft(w, 4096);
  // Harmonic peaks sit every 100 Hz; the envelope maximum near each formant
  // must be the harmonic closest to it.
  const auto peak_near = [&](double hz) {
    const auto lo = static_cast<std::size_t>((hz - 150) * 4096 / 16000);
    const auto hi = static_cast<std::size_t>((hz + 150) * 4096 / 16000);
    std::size_t best = lo;
    for (std::size_t k = lo; k <= hi; ++k) {
      if (std::abs(spec[k]) > std::abs(spec[best])) best = k;
    }
    return best;
  };
  EXPECT_NEAR(static_cast<double>(peak_near(700)), 700.0 * 4096 / 16000, 1.0);
  EXPECT_NEAR(static_cast<double>(peak_near(1200)), 1200.0 * 4096 / 16000, 1.0);
}

TEST(SynthSpeech, EmptyTrackIsIdentity) {
  const auto g = synth_glottal_source(130.0, 0.3, 16000);
  FormantTrack t;
  t.segments.push_back({300.0, {}});
  const auto s = synth_speech(g, t);
  ASSERT_EQ(s.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(s[i], g[i], 1e-12);
}

TEST(SynthSpeech, MatchesDirectRecursion) {
  const auto g = synth_glottal_source(110.0, 0.2, 16000);
  const std::vector<Resonance> res{{500, 90}, {1500, 110}};
  const auto s = synth_speech(g, FormantTrack::stationary(res, 200));
  const auto a = resonator_denominator(res, 16000);
  std::vector<double> y(g.size(), 0.0);
  for (std::size_t t = 0; t < y.size(); ++t) {
    double acc = g[t];
    for (std::size_t k = 1; k < a.size() && k <= t; ++k) acc -= a[k] * y[t - k];
    y[t] = acc;
  }
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(s[i], y[i], 1e-9 * (1 + std::abs(y[i])));
}

TEST(SynthSpeech, AlternatingSegmentsAlternateLpc) {
  const std::vector<Resonance> low{{300, 80}, {2300, 100}};
  const std::vector<Resonance> high{{700, 100}, {1200, 100}};
  const auto g = synth_glottal_source(100.0, 1.2, 16000);
  const auto s = synth_speech(lip_radiate(g), FormantTrack::alternating(low, high, 150, 1200));
  // Each segment's frame must sit closer, in envelope shape, to its own tract.
  const auto shape_distance = [](const std::vector<double>& est, const std::vector<double>& ref) {
    std::vector<double> d;
    for (int k = 0; k <= 320; ++k) {
      const double w = kPi * k / 512;
      d.push_back(oracle::db(std::abs(oracle::poly_at(ref, w)) / std::abs(oracle::poly_at(est, w))));
    }
    double mu = 0.0;
    for (double v : d) mu += v;
    mu /= d.size();
    double e = 0.0;
    for (double v : d) e += (v - mu) * (v - mu);
    return std::sqrt(e / d.size());
  };
  const auto a_low = resonator_denominator(low, 16000);
  const auto a_high = resonator_denominator(high, 16000);
  for (int seg = 0; seg < 8; ++seg) {
    const auto at = static_cast<std::size_t>((seg * 150 + 75) * 16) - 160;
    const auto a = gfm_iaif(std::span<const double>(s.samples().data() + at, 320), 16000).a_v;
    const bool is_low = seg % 2 == 0;
    const double own = shape_distance(a, is_low ? a_low : a_high);
    const double other = shape_distance(a, is_low ? a_high : a_low);
    EXPECT_LT(own, other) << "segment " << seg;
  }
}

TEST(SynthSpeech, CrossfadeIsContinuous) {
  const auto g = synth_glottal_source(100.0, 0.4, 16000);
  const auto s = synth_speech(g, FormantTrack::alternating({{300, 80}}, {{2000, 100}}, 200, 400));
  double worst = 0.0, typical = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double step = std::abs(s[i] - s[i - 1]);
    typical = std::max(typical, i < 3000 ? step : 0.0);
    if (i > 3000 && i < 3400) worst = std::max(worst, step);
  }
  EXPECT_LE(worst, 2.0 * typical + 1e-12);
}

TEST(SynthSpeech, RejectsBadTracks) {
  const auto g = synth_glottal_source(100.0, 0.5, 16000);
  EXPECT_TEGG_ERROR(synth_speech(g, FormantTrack::stationary({{9000, 100}}, 500)),
                    Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(synth_speech(g, FormantTrack::stationary({{1000, 0}}, 500)),
                    Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(synth_speech(g, FormantTrack::stationary({{1000, 100}}, 100)),
                    Errc::kInvalidArgument);
}

TEST(FormantTrack, AlternatingCoversDuration) {
  const auto t = FormantTrack::alternating({{300, 80}}, {{700, 90}}, 150, 1000);
  EXPECT_DOUBLE_EQ(t.total_ms(), 1000.0);
  ASSERT_GE(t.segments.size(), 7u);
  EXPECT_EQ(t.segments[0].resonances[0].center_hz, 300.0);
  EXPECT_EQ(t.segments[1].resonances[0].center_hz, 700.0);
}

TEST(MakeFixture, ChannelsAlignedAndScaled) {
  FixtureSpec fs;
  fs.duration_s = 0.5;
  fs.lead_silence_ms = 100;
  fs.trail_silence_ms = 50;
  const auto rec = make_fixture(fs);
  EXPECT_EQ(rec.speech.size(), 24000u);
  EXPECT_EQ(rec.egg.size(), 24000u);
  EXPECT_NEAR(rec.speech.peak(), 0.5, 1e-12);
  EXPECT_NEAR(rec.egg.peak(), 0.5, 1e-12);
  for (std::size_t i = 0; i < 4800; ++i) ASSERT_EQ(rec.egg[i], 0.0) << i;
  for (std::size_t i = 24000 - 2400; i < 24000; ++i) ASSERT_EQ(rec.egg[i], 0.0) << i;
}

TEST(MakeFixture, NoiseIsSeeded) {
  FixtureSpec fs;
  fs.duration_s = 0.2;
  fs.noise_dbfs = -40;
  const auto a = make_fixture(fs);
  const auto b = make_fixture(fs);
  fs.seed = 2;
  const auto c = make_fixture(fs);
  EXPECT_EQ(std::vector<double>(a.speech.samples().begin(), a.speech.samples().end()),
            std::vector<double>(b.speech.samples().begin(), b.speech.samples().end()));
  EXPECT_NE(a.speech[100], c.speech[100]);
}

TEST(LipRadiate, FirstDifferenceAtMappedCoefficient) {
  const MonoSignal x({1.0, 2.0, 4.0}, 16000);
  const auto y = lip_radiate(x, 0.99);
  EXPECT_DOUBLE_EQ(y[0], 1.0);
  EXPECT_DOUBLE_EQ(y[1], 2.0 - 0.99);
  EXPECT_DOUBLE_EQ(y[2], 4.0 - 1.98);
  // At 48 kHz the zero moves to keep the same corner frequency.
  const auto w = lip_radiate(MonoSignal({0.0, 1.0}, 48000), 0.99);
  EXPECT_NEAR(w[1], 1.0, 1e-12);
  EXPECT_NEAR(lip_radiate(MonoSignal({1.0, 0.0}, 48000), 0.99)[1], -std::pow(0.99, 1.0 / 3), 1e-12);
  EXPECT_TEGG_ERROR(lip_radiate(x, 1.0), Errc::kInvalidArgument);
}

}  // namespace
}  // namespace tegg
