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

#ifndef TEGG_LPC_HPP_
#define TEGG_LPC_HPP_

#include <complex>
#include <span>
#include <vector>

#include "tegg/framing.hpp"

namespace tegg {

// Coefficients a (a[0] = 1) of the inverse filter A(z) = sum_k a_k z^-k, and
// the mean-square one-step prediction error of the frame.
struct LpcSolution {
  std::vector<double> coeffs;
  double error_power = 0.0;
};

// Autocorrelation-method linear prediction solved by Levinson-Durbin.
// Throws Errc::kDegenerateFrame for an all-zero frame or a singular
// autocorrelation, Errc::kInvalidArgument if order >= frame length.
LpcSolution lpc_autocorr(std::span<const double> frame, int order);

// Prediction residual e(t) = sum_k a_k x(t - k), zero initial state.
std::vector<double> inverse_filter(std::span<const double> x,
                                   std::span<const double> coeffs);

// Synthesis through 1 / A(z), zero initial state.
std::vector<double> all_pole_filter(std::span<const double> x,
                                    std::span<const double> coeffs);

// Roots of z^p A(z) for a monic coefficient vector, via companion-matrix
// eigenvalues.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

// Monic real polynomial with the given roots (conjugate pairs expected).
std::vector<double> polynomial_from_roots(std::span<const std::complex<double>> roots);

inline constexpr double kDefaultStabilityRadius = 0.998;

// Returns coeffs unchanged when every root already lies within max_radius.
// Otherwise roots outside the unit circle are reflected (r -> 1 / conj(r)) and
// any root still beyond max_radius is pulled in to exactly max_radius.
std::vector<double> ensure_stable(std::span<const double> coeffs,
                                  double max_radius = kDefaultStabilityRadius);

// Per-frame decomposition into vocal tract, glottis and lip radiation.
struct LpcEstimate {
  std::vector<double> a_v;
  std::vector<double> a_g;
  std::vector<double> a_l;
};

struct GfmIaifConfig {
  // 0 selects the conventional 2 + fs/1000.
  int vocal_tract_order = 0;
  int glottis_order = 3;
  // Lip radiation 1 - d z^-1; its leaky integrator uses the same d.
  double lip_radiation = 0.99;
  double stability_radius = kDefaultStabilityRadius;
  // Taper applied before every inner LPC solve.
  WindowKind window = WindowKind::kPeriodicHann;
};

int default_vocal_tract_order(int sample_rate);

// GFM-IAIF on one unwindowed frame. A ramp pre-frame of order + 1 samples
// absorbs filter start-up; every LPC solve tapers the current signal with
// config.window over the frame length. Sequence:
//   1. integrate out lip radiation;
//   2. gross glottis: glottis_order cascaded first-order fits;
//   3. gross vocal tract on the glottis-cancelled signal;
//   4. fine glottis (glottis_order) on the tract-cancelled signal;
//   5. fine vocal tract on the fine-glottis-cancelled signal.
// a_v and a_g are stabilized before return.
LpcEstimate gfm_iaif(std::span<const double> frame, int sample_rate,
                     const GfmIaifConfig& config = {});

}  // namespace tegg

#endif  // TEGG_LPC_HPP_
