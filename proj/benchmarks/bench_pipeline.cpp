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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tegg/fixtures.hpp"
#include "tegg/lpc.hpp"
#include "tegg/resample.hpp"
#include "tegg/spectral.hpp"
#include "tegg/stft.hpp"
#include "tegg/transform.hpp"

namespace tegg {
namespace {

StereoRecording take(double seconds) {
  FixtureSpec fs;
  fs.duration_s = seconds;
  fs.am_rate_hz = 3;
  fs.am_depth = 0.4;
  fs.noise_dbfs = -70;
  return make_fixture(fs);
}

void BM_Transform(benchmark::State& state) {
  const double seconds = static_cast<double>(state.range(0));
  const StereoRecording rec = take(seconds);
  for (auto _ : state) benchmark::DoNotOptimize(transform(rec));
  state.counters["realtime_factor"] = benchmark::Counter(
      seconds * static_cast<double>(state.iterations()), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Transform)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_StftRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (double& v : x) v = n(rng);
  const MonoSignal sig(std::move(x), 48000);
  const FrameSpec spec(20, 0.5, 48000);
  for (auto _ : state) benchmark::DoNotOptimize(istft(stft(sig, spec, default_fft_size(spec))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StftRoundTrip)->Arg(48000)->Arg(480000)->Unit(benchmark::kMillisecond);

void BM_GfmIaifFrame(benchmark::State& state) {
  const MonoSignal s16 = resample_down(take(0.2).speech, 16000);
  const std::span<const double> frame(s16.samples().data() + 1000, 320);
  for (auto _ : state) benchmark::DoNotOptimize(gfm_iaif(frame, 16000));
}
BENCHMARK(BM_GfmIaifFrame);

void BM_MinPhaseFir(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  const MagnitudeResponse target = resonator_magnitude(neutral_vowel(), 16000, grid, 16000);
  for (auto _ : state) benchmark::DoNotOptimize(min_phase_fir(target, grid / 2));
}
BENCHMARK(BM_MinPhaseFir)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_ResampleDown(benchmark::State& state) {
  const MonoSignal speech = take(1.0).speech;
  for (auto _ : state) benchmark::DoNotOptimize(resample_down(speech, 16000));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(speech.size()));
}
BENCHMARK(BM_ResampleDown)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tegg

BENCHMARK_MAIN();
