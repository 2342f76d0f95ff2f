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

#include "tegg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tegg/error.hpp"
#include "tegg/fft.hpp"

namespace tegg {

MagnitudeResponse::MagnitudeResponse(std::vector<double> mags, std::size_t grid,
                                     int rate)
    : magnitudes(std::move(mags)), grid_size(grid), sample_rate(rate) {
  if (grid_size < 2 || grid_size % 2 != 0 || magnitudes.size() != grid_size / 2 + 1) {
    throw Error(Errc::kDimensionMismatch,
                "magnitude vector must hold grid_size / 2 + 1 values for an even grid");
  }
  if (sample_rate <= 0) throw Error(Errc::kInvalidArgument, "sample rate must be positive");
  for (double m : magnitudes) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw Error(Errc::kInvalidArgument, "magnitudes must be finite and non-negative");
    }
  }
}

std::vector<std::complex<double>> evaluate_all_pole_response(
    std::span<const double> denominator, std::size_t grid_size) {
  if (denominator.empty() || denominator[0] != 1.0) {
    throw Error(Errc::kInvalidArgument, "denominator must start with a[0] = 1");
  }
  if (grid_size < 2 * denominator.size() || grid_size % 2 != 0) {
    throw Error(Errc::kInvalidArgument,
                "grid size must be even and at least twice the coefficient count");
  }
  RealFft fft(grid_size);
  std::vector<std::complex<double>> a(fft.bins());
  fft.forward(denominator, a);
  for (auto& v : a) {
    if (std::abs(v) < 1e-12) {
      throw Error(Errc::kUnstableFilter,
                  "denominator vanishes on the unit circle");
    }
    v = 1.0 / v;
  }
  return a;
}

std::vector<double> fir_magnitude(std::span<const double> taps,
                                  std::size_t grid_size) {
  RealFft fft(grid_size);
  std::vector<std::complex<double>> spec(fft.bins());
  fft.forward(taps.first(std::min(taps.size(), grid_size)), spec);
  std::vector<double> mag(spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) mag[k] = std::abs(spec[k]);
  return mag;
}

MonoSignal min_phase_fir(const MagnitudeResponse& target, std::size_t n_taps) {
  const std::size_t n = target.grid_size;
  if (n_taps == 0 || n_taps > n) {
    throw Error(Errc::kInvalidArgument,
                "tap count must be in [1, grid size], got " + std::to_string(n_taps));
  }
  const double peak = *std::max_element(target.magnitudes.begin(), target.magnitudes.end());
  if (!(peak > 0.0)) {
    throw Error(Errc::kSilentSignal, "minimum-phase target is all zero");
  }

  RealFft fft(n);
  const double floor = kMinPhaseLogFloor * peak;
  std::vector<std::complex<double>> spec(fft.bins());
  for (std::size_t k = 0; k < spec.size(); ++k) {
    spec[k] = std::log(std::max(target.magnitudes[k], floor));
  }

  // Real cepstrum of the log magnitude, folded onto positive quefrencies.
  std::vector<double> cep(n);
  fft.inverse(spec, cep);
  for (std::size_t i = 1; i < n / 2; ++i) cep[i] *= 2.0;
  std::fill(cep.begin() + static_cast<std::ptrdiff_t>(n / 2 + 1), cep.end(), 0.0);

  fft.forward(cep, spec);
  for (auto& v : spec) v = std::exp(v);
  std::vector<double> h(n);
  fft.inverse(spec, h);
  h.resize(n_taps);

  const std::size_t taper = std::min(kMinPhaseTaperLength, n_taps / 8);
  for (std::size_t i = 0; i < taper; ++i) {
    const double w = 0.5 * (1.0 + std::cos(std::numbers::pi * (static_cast<double>(i) + 0.5) /
                                           static_cast<double>(taper)));
    h[n_taps - taper + i] *= w;
  }
  return MonoSignal(std::move(h), target.sample_rate);
}

}  // namespace tegg
