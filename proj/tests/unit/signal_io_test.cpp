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

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tegg/resample.hpp"
#include "tegg/signal.hpp"
#include "tegg/spectral.hpp"
#include "tegg/wav.hpp"

namespace tegg {
namespace {

using testing::TempDir;
using testing::WarningCapture;

MonoSignal sine(double freq, double amp, double seconds, int rate) {
  std::vector<double> x(static_cast<std::size_t>(seconds * rate));
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = amp * std::sin(2.0 * std::numbers::pi * freq * i / rate);
  return MonoSignal(std::move(x), rate);
}

MonoSignal random_signal(std::mt19937_64& rng, std::size_t n, int rate) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  return MonoSignal(std::move(x), rate);
}

std::vector<unsigned char> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t le32(const unsigned char* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t le16(const unsigned char* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }

void put16(std::vector<unsigned char>& b, std::uint16_t v) {
  b.push_back(v & 0xFF);
  b.push_back(v >> 8);
}
void put32(std::vector<unsigned char>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xFF);
}
void put_tag(std::vector<unsigned char>& b, const char* t) { b.insert(b.end(), t, t + 4); }

TEST(MonoSignal, RejectsNonFiniteAndBadRate) {
  EXPECT_TEGG_ERROR(MonoSignal({0.0, NAN}, 16000), Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(MonoSignal({0.0}, 0), Errc::kInvalidArgument);
  EXPECT_NO_THROW(MonoSignal({}, 8000));
}

TEST(StereoRecording, ChannelsMustBeSynchronized) {
  EXPECT_TEGG_ERROR(StereoRecording(MonoSignal({0, 0}, 48000), MonoSignal({0}, 48000)),
                    Errc::kDimensionMismatch);
  EXPECT_TEGG_ERROR(StereoRecording(MonoSignal({0}, 48000), MonoSignal({0}, 44100)),
                    Errc::kDimensionMismatch);
}

TEST(Wav, StereoTwentyFourBitOneSecond) {
  TempDir dir;
  std::mt19937_64 rng(3);
  auto l = random_signal(rng, 48000, 48000);
  auto r = random_signal(rng, 48000, 48000);
  write_stereo_wav(l, r, dir / "take.wav", WavEncoding::kPcm24);
  auto rec = read_recording(dir / "take.wav");
  ASSERT_EQ(rec.speech.size(), 48000u);
  ASSERT_EQ(rec.egg.size(), 48000u);
  EXPECT_EQ(rec.speech.sample_rate(), 48000);
  const double lsb = std::ldexp(1.0, -23);
  for (std::size_t i = 0; i < 48000; ++i) {
    ASSERT_LE(std::abs(rec.speech[i] - l[i]), lsb);
    ASSERT_LE(std::abs(rec.egg[i] - r[i]), lsb);
  }
}

TEST(Wav, ChannelMapSwapsSpeechAndEgg) {
  TempDir dir;
  write_stereo_wav(MonoSignal({0.25, 0.25}, 16000), MonoSignal({-0.5, -0.5}, 16000),
                   dir / "t.wav");
  auto rec = read_recording(dir / "t.wav", SpeechChannel::kRight);
  EXPECT_DOUBLE_EQ(rec.speech[0], -0.5);
  EXPECT_DOUBLE_EQ(rec.egg[0], 0.25);
}

TEST(Wav, MonoFileIsNotARecording) {
  TempDir dir;
  write_wav(MonoSignal({0.1, 0.2}, 16000), dir / "mono.wav");
  try {
    read_recording(dir / "mono.wav");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kChannelCount);
    EXPECT_STREQ(e.what(), "expected 2 channels, found 1");
  }
}

TEST(Wav, DistinctErrorsForBadInputs) {
  TempDir dir;
  EXPECT_TEGG_ERROR(read_recording(dir / "missing.wav"), Errc::kFileNotFound);

  std::ofstream(dir / "text.wav") << "definitely not audio, just some text";
  EXPECT_TEGG_ERROR(read_recording(dir / "text.wav"), Errc::kNotWav);

  // 8-bit PCM is outside the supported set.
  std::vector<unsigned char> b;
  put_tag(b, "RIFF");
  put32(b, 36 + 4);
  put_tag(b, "WAVE");
  put_tag(b, "fmt ");
  put32(b, 16);
  put16(b, 1);
  put16(b, 2);
  put32(b, 8000);
  put32(b, 16000);
  put16(b, 2);
  put16(b, 8);
  put_tag(b, "data");
  put32(b, 4);
  for (int i = 0; i < 4; ++i) b.push_back(128);
  std::ofstream(dir / "u8.wav", std::ios::binary)
      .write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  EXPECT_TEGG_ERROR(read_recording(dir / "u8.wav"), Errc::kUnsupportedEncoding);
}

TEST(Wav, ReadsExtensibleFloat) {
  TempDir dir;
  std::vector<unsigned char> b;
  const float samples[4] = {0.5f, -0.25f, 1.0f, -1.0f};
  put_tag(b, "RIFF");
  put32(b, 4 + 8 + 40 + 8 + 16);
  put_tag(b, "WAVE");
  put_tag(b, "fmt ");
  put32(b, 40);
  put16(b, 0xFFFE);
  put16(b, 2);
  put32(b, 44100);
  put32(b, 44100 * 8);
  put16(b, 8);
  put16(b, 32);
  put16(b, 22);
  put16(b, 32);
  put32(b, 3);
  put16(b, 3);  // sub-format: IEEE float
  const unsigned char rest[14] = {0x00, 0x00, 0x00, 0x00, 0x10, 0x00, 0x80, 0x00,
                                  0x00, 0xAA, 0x00, 0x38, 0x9B, 0x71};
  b.insert(b.end(), rest, rest + 14);
  put_tag(b, "data");
  put32(b, 16);
  for (float f : samples) {
    std::uint32_t u;
    std::memcpy(&u, &f, 4);
    put32(b, u);
  }
  std::ofstream(dir / "ext.wav", std::ios::binary)
      .write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  auto rec = read_recording(dir / "ext.wav");
  EXPECT_EQ(rec.speech.sample_rate(), 44100);
  ASSERT_EQ(rec.speech.size(), 2u);
  EXPECT_DOUBLE_EQ(rec.speech[0], 0.5);
  EXPECT_DOUBLE_EQ(rec.egg[0], -0.25);
  EXPECT_DOUBLE_EQ(rec.speech[1], 1.0);
  EXPECT_DOUBLE_EQ(rec.egg[1], -1.0);
}

TEST(Wav, MonoHeaderDeclaresRateChannelsAndDepth) {
  TempDir dir;
  write_wav(MonoSignal(std::vector<double>(48000, 0.1), 48000), dir / "m.wav",
            WavEncoding::kPcm24);
  auto bytes = slurp(dir / "m.wav");
  ASSERT_GE(bytes.size(), 44u);
  EXPECT_EQ(std::memcmp(bytes.data(), "RIFF", 4), 0);
  EXPECT_EQ(std::memcmp(bytes.data() + 8, "WAVE", 4), 0);
  EXPECT_EQ(le16(bytes.data() + 20), 1);  // PCM
  EXPECT_EQ(le16(bytes.data() + 22), 1);  // channels
  EXPECT_EQ(le32(bytes.data() + 24), 48000u);
  EXPECT_EQ(le16(bytes.data() + 34), 24);
  EXPECT_EQ(le32(bytes.data() + 40), 48000u * 3);
}

TEST(Wav, ClipsWithWarning) {
  TempDir dir;
  WarningCapture warnings;
  auto res = write_wav(MonoSignal({1.5, 0.0, -2.0}, 16000), dir / "c.wav",
                       WavEncoding::kFloat32);
  EXPECT_EQ(res.clipped_samples, 2u);
  EXPECT_EQ(warnings.count(), 1);
  auto w = read_wav(dir / "c.wav");
  EXPECT_DOUBLE_EQ(w.channels[0][0], 1.0);
  EXPECT_DOUBLE_EQ(w.channels[0][2], -1.0);
}

TEST(Wav, WriteErrors) {
  TempDir dir;
  EXPECT_TEGG_ERROR(write_wav(MonoSignal({}, 16000), dir / "e.wav"), Errc::kEmptySignal);
  EXPECT_TEGG_ERROR(write_wav(MonoSignal({0.1}, 16000), dir / "no" / "such" / "dir.wav"),
                    Errc::kIoError);
  EXPECT_FALSE(std::filesystem::exists(dir / "e.wav"));
}

TEST(Wav, WriteLeavesNoTemporaryFiles) {
  TempDir dir;
  write_wav(MonoSignal({0.1, 0.2}, 16000), dir / "a.wav");
  write_wav(MonoSignal({0.3}, 16000), dir / "a.wav");
  std::size_t n = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path())) {
    (void)e;
    ++n;
  }
  EXPECT_EQ(n, 1u);
  EXPECT_EQ(read_wav(dir / "a.wav").channels[0].size(), 1u);
}

class WavRoundTrip : public ::testing::TestWithParam<WavEncoding> {};

TEST_P(WavRoundTrip, ErrorWithinOneLsb) {
  TempDir dir;
  const WavEncoding enc = GetParam();
  const double lsb = enc == WavEncoding::kFloat32 ? std::ldexp(1.0, -24)
                                                  : std::ldexp(1.0, 1 - bits_per_sample(enc));
  std::mt19937_64 rng(11 + static_cast<int>(enc));
  for (int trial = 0; trial < 5; ++trial) {
    auto x = random_signal(rng, 4000, 22050);
    write_wav(x, dir / "r.wav", enc);
    auto w = read_wav(dir / "r.wav");
    ASSERT_EQ(w.sample_rate, 22050);
    ASSERT_EQ(w.encoding, enc);
    ASSERT_EQ(w.channels[0].size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      ASSERT_LE(std::abs(w.channels[0][i] - x[i]), lsb) << "sample " << i;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllEncodings, WavRoundTrip,
                         ::testing::Values(WavEncoding::kPcm16, WavEncoding::kPcm24,
                                           WavEncoding::kPcm32, WavEncoding::kFloat32));

TEST(Wav, SixteenBitErrorBelowHalfLsbScale) {
  TempDir dir;
  std::mt19937_64 rng(5);
  auto x = random_signal(rng, 10000, 16000);
  write_wav(x, dir / "q.wav", WavEncoding::kPcm16);
  auto w = read_wav(dir / "q.wav");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(w.channels[0][i] - x[i]));
  EXPECT_LT(worst, std::ldexp(1.0, -15));
}

TEST(ResampleDown, ConstantStaysConstant) {
  auto y = resample_down(MonoSignal(std::vector<double>(4800, 0.5), 48000), 16000);
  ASSERT_EQ(y.size(), 1600u);
  EXPECT_EQ(y.sample_rate(), 16000);
  for (std::size_t i = 200; i < 1400; ++i) EXPECT_NEAR(y[i], 0.5, 1e-3);
}

TEST(ResampleDown, LengthIsCeiling) {
  for (std::size_t n : {1u, 2u, 3u, 4u, 100u, 101u, 4801u}) {
    auto y = resample_down(MonoSignal(std::vector<double>(n, 0.1), 48000), 16000);
    EXPECT_EQ(y.size(), (n + 2) / 3) << n;
  }
}

TEST(ResampleDown, OneKilohertzKeepsAmplitude) {
  auto y = resample_down(sine(1000.0, 0.7, 1.0, 48000), 16000);
  std::span<const double> mid = y.samples().subspan(1600, 12800);
  const double a = oracle::fit_sine_amplitude(mid, 1000.0, 16000.0);
  EXPECT_NEAR(oracle::db(a / 0.7), 0.0, 0.1);
}

TEST(ResampleDown, PassbandFlatToSevenKilohertz) {
  for (double f : {100.0, 2000.0, 4000.0, 6000.0, 7000.0}) {
    auto y = resample_down(sine(f, 0.5, 0.5, 48000), 16000);
    const double a = oracle::fit_sine_amplitude(y.samples().subspan(800, 6400), f, 16000.0);
    EXPECT_NEAR(oracle::db(a / 0.5), 0.0, 0.1) << f << " Hz";
  }
}

TEST(ResampleDown, RejectsNearNyquistTone) {
  auto y = resample_down(sine(7900.0, 0.5, 1.0, 48000), 16000);
  const double a = oracle::fit_sine_amplitude(y.samples().subspan(1600, 12800), 7900.0, 16000.0);
  EXPECT_LE(oracle::db(a / 0.5), -40.0);
}

TEST(ResampleDown, AliasedTonesStayBelowFortyDb) {
  // Tones above the target Nyquist fold to f mod 16k; measure at the folded
  // frequency against a passband reference.
  const double ref = oracle::fit_sine_amplitude(
      resample_down(sine(1000.0, 0.5, 0.5, 48000), 16000).samples().subspan(800, 6400), 1000.0,
      16000.0);
  for (double f : {8500.0, 10000.0, 13000.0, 17000.0, 21000.0}) {
    auto y = resample_down(sine(f, 0.5, 0.5, 48000), 16000);
    double folded = std::fmod(f, 16000.0);
    if (folded > 8000.0) folded = 16000.0 - folded;
    const double a = oracle::fit_sine_amplitude(y.samples().subspan(800, 6400), folded, 16000.0);
    EXPECT_LE(oracle::db(a / ref), -40.0) << f << " Hz";
  }
}

TEST(ResampleDown, KeepsTimeAlignment) {
  std::vector<double> x(4800, 0.0);
  x[2400] = 1.0;
  auto y = resample_down(MonoSignal(x, 48000), 16000);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (std::abs(y[i]) > std::abs(y[arg])) arg = i;
  EXPECT_EQ(arg, 800u);
}

TEST(ResampleDown, Errors) {
  MonoSignal x(std::vector<double>(100, 0.0), 48000);
  EXPECT_TEGG_ERROR(resample_down(x, 44100), Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(resample_down(x, 48000), Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(resample_down(x, 96000), Errc::kInvalidArgument);
}

TEST(Interpolate, UnitImpulseGivesFilterResponse) {
  std::vector<double> h(256, 0.0);
  h[0] = 1.0;
  auto y = interpolate_impulse_response(MonoSignal(h, 16000), 3);
  ASSERT_EQ(y.size(), 768u);
  EXPECT_EQ(y.sample_rate(), 48000);
  double sum = 0.0;
  for (double v : y.samples()) sum += v;
  EXPECT_NEAR(sum / 3.0, 1.0, 1e-2);

  std::vector<double> stuffed(768, 0.0);
  stuffed[0] = 3.0;
  auto expect = interpolation_filter(16000, 3).filter(stuffed);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(y[i], expect[i], 1e-12);
}

TEST(Interpolate, DcLevelPreserved) {
  auto y = interpolate_impulse_response(MonoSignal(std::vector<double>(400, 0.3), 16000), 3);
  for (std::size_t i = 300; i < y.size(); ++i) EXPECT_NEAR(y[i], 0.3, 1e-2);
}

TEST(Interpolate, MagnitudeBelowOldNyquistPreserved) {
  // A short minimum-phase FIR with a known 16 kHz response. Samples carry the
  // level factor, so the response is compared per unit of factor.
  const std::vector<double> taps = {1.0, -0.6, 0.25, 0.1};
  std::vector<double> h(512, 0.0);
  std::copy(taps.begin(), taps.end(), h.begin());
  auto y = interpolate_impulse_response(MonoSignal(h, 16000), 3);
  const auto spec = oracle::naive_dft(y.samples(), y.size());
  for (std::size_t k = 1; k < spec.size(); ++k) {
    const double f = 48000.0 * k / y.size();
    if (f >= 8000.0) break;
    const double want = std::abs(oracle::poly_at(taps, 2.0 * std::numbers::pi * f / 16000.0));
    ASSERT_NEAR(oracle::db(std::abs(spec[k]) / 3.0 / want), 0.0, 1.0) << f << " Hz";
  }
}

TEST(Interpolate, Errors) {
  EXPECT_TEGG_ERROR(interpolate_impulse_response(MonoSignal({1.0}, 16000), 1),
                    Errc::kInvalidArgument);
  EXPECT_TEGG_ERROR(interpolate_impulse_response(MonoSignal({}, 16000), 3), Errc::kEmptySignal);
}

TEST(PadSilence, Arithmetic) {
  MonoSignal x(std::vector<double>(48000, 0.2), 48000);
  EXPECT_EQ(pad_silence(x).size(), 52800u);
  auto same = pad_silence(x, 0.0, 0.0);
  EXPECT_EQ(same.size(), x.size());
  EXPECT_TRUE(std::equal(same.samples().begin(), same.samples().end(), x.samples().begin()));
  auto lead = pad_silence(MonoSignal(std::vector<double>(100, 1.0), 16000), 20.0, 0.0);
  ASSERT_EQ(lead.size(), 420u);
  EXPECT_EQ(lead[319], 0.0);
  EXPECT_EQ(lead[320], 1.0);
  EXPECT_TEGG_ERROR(pad_silence(x, -1.0, 0.0), Errc::kInvalidArgument);
}

TEST(PadSilence, LengthMatchesDurations) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ms(0.0, 200.0);
  for (int t = 0; t < 50; ++t) {
    const int rate = (t % 2) ? 16000 : 44100;
    const double a = ms(rng), b = ms(rng);
    MonoSignal x(std::vector<double>(1000 + t, 0.1), rate);
    EXPECT_EQ(pad_silence(x, a, b).size(),
              x.size() + static_cast<std::size_t>(std::llround(a * rate / 1000.0)) +
                  static_cast<std::size_t>(std::llround(b * rate / 1000.0)));
  }
}

TEST(PeakNormalize, Arithmetic) {
  auto y = peak_normalize(MonoSignal({0.1, -0.25, 0.2}, 16000), -1.0);
  EXPECT_NEAR(y.peak(), 0.891, 1e-3);
  EXPECT_NEAR(y.peak(), std::pow(10.0, -1.0 / 20.0), 1e-6);
  EXPECT_NEAR(y[0] / y[2], 0.5, 1e-12);
  EXPECT_TEGG_ERROR(peak_normalize(MonoSignal({0.0, 0.0}, 16000)), Errc::kSilentSignal);
}

TEST(PeakNormalize, IdempotentOnRandomSignals) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> target(-30.0, 0.0);
  for (int t = 0; t < 50; ++t) {
    auto x = random_signal(rng, 500, 8000).scaled(0.01 + 0.1 * t);
    const double db = target(rng);
    auto y = peak_normalize(x, db);
    EXPECT_NEAR(y.peak(), std::pow(10.0, db / 20.0), 1e-6);
    auto z = peak_normalize(y, db);
    for (std::size_t i = 0; i < y.size(); ++i) ASSERT_NEAR(z[i], y[i], 1e-9);
  }
}

}  // namespace
}  // namespace tegg
