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

#ifndef TEGG_SPECTRAL_HPP_
#define TEGG_SPECTRAL_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tegg/signal.hpp"

namespace tegg {

// Non-negative magnitudes on the one-sided grid of a grid_size-point FFT:
// entry k sits at k * sample_rate / grid_size Hz, k = 0 .. grid_size / 2.
struct MagnitudeResponse {
  std::vector<double> magnitudes;
  std::size_t grid_size = 0;
  int sample_rate = 0;

  MagnitudeResponse() = default;
  MagnitudeResponse(std::vector<double> mags, std::size_t grid, int rate);

  double frequency(std::size_t k) const {
    return static_cast<double>(k) * sample_rate / static_cast<double>(grid_size);
  }
  std::size_t size() const { return magnitudes.size(); }
};

// H(e^jw) = 1 / A(e^jw) on the one-sided grid, A(e^jw) = sum_k a_k e^-jwk.
// Requires a[0] == 1 and grid_size >= 2 * a.size(). Throws
// Errc::kUnstableFilter if |A| drops below 1e-12 anywhere on the grid.
std::vector<std::complex<double>> evaluate_all_pole_response(
    std::span<const double> denominator, std::size_t grid_size);

// Magnitude of the transfer function of an FIR on a grid_size-point grid.
std::vector<double> fir_magnitude(std::span<const double> taps,
                                  std::size_t grid_size);

inline constexpr double kMinPhaseLogFloor = 1e-8;
inline constexpr std::size_t kMinPhaseTaperLength = 256;

// Minimum-phase FIR with the given magnitude, built by folding the real
// cepstrum of the log magnitude (the Hilbert-transform relation between
// log-magnitude and minimum phase). Magnitudes are floored at
// kMinPhaseLogFloor times the maximum. The result is truncated to n_taps with
// a half-Hann taper over the last min(kMinPhaseTaperLength, n_taps / 8) taps.
MonoSignal min_phase_fir(const MagnitudeResponse& target, std::size_t n_taps);

}  // namespace tegg

#endif  // TEGG_SPECTRAL_HPP_
