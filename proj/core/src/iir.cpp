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

#include "tegg/iir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tegg/error.hpp"

namespace tegg {
namespace {

using cplx = std::complex<double>;

void validate(int order, double cutoff_hz, double sample_rate) {
  if (order < 1) throw Error(Errc::kInvalidArgument, "filter order must be >= 1");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < sample_rate / 2.0)) {
    throw Error(Errc::kInvalidArgument,
                "cutoff must lie strictly between 0 and Nyquist");
  }
}

std::vector<cplx> chebyshev1_prototype(int order, double ripple_db) {
  const double eps = std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
  const double mu = std::asinh(1.0 / eps) / order;
  std::vector<cplx> poles;
  for (int k = 0; k < order; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + 1) / (2.0 * order);
    poles.emplace_back(-std::sinh(mu) * std::sin(theta),
                       std::cosh(mu) * std::cos(theta));
  }
  return poles;
}

// Groups digital poles into sections. zero_at is the real location of every
// finite zero (near -1 for low-pass, +1 for high-pass), or 0 for all-pole.
SosFilter assemble(const std::vector<cplx>& zpoles, double zero_at) {
  SosFilter f;
  const int n = static_cast<int>(zpoles.size());
  for (int k = 0; k < n / 2; ++k) {
    const cplx p = zpoles[k];
    Biquad s;
    s.a1 = -2.0 * p.real();
    s.a2 = std::norm(p);
    if (zero_at != 0.0) {
      s.b0 = 1.0;
      s.b1 = -2.0 * zero_at;
      s.b2 = zero_at * zero_at;
    }
    f.sections.push_back(s);
  }
  if (n % 2 == 1) {
    Biquad s;
    s.a1 = -zpoles[n / 2].real();
    if (zero_at != 0.0) s.b1 = -zero_at;
    f.sections.push_back(s);
  }
  return f;
}

void normalize_gain(SosFilter& f, double at_hz, double sample_rate,
                    double target) {
  const double g = std::abs(f.response(at_hz, sample_rate));
  const double scale = target / g;
  Biquad& s = f.sections.front();
  s.b0 *= scale;
  s.b1 *= scale;
  s.b2 *= scale;
}

}  // namespace

cplx SosFilter::response(double freq_hz, double sample_rate) const {
  const cplx zinv = std::polar(1.0, -2.0 * std::numbers::pi * freq_hz / sample_rate);
  cplx h = 1.0;
  for (const Biquad& s : sections) {
    h *= (s.b0 + zinv * (s.b1 + zinv * s.b2)) /
         (1.0 + zinv * (s.a1 + zinv * s.a2));
  }
  return h;
}

std::vector<double> SosFilter::filter(std::span<const double> x) const {
  std::vector<double> y(x.begin(), x.end());
  for (const Biquad& s : sections) {
    double z1 = 0.0, z2 = 0.0;
    for (double& v : y) {
      const double in = v;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

std::vector<double> SosFilter::filtfilt(std::span<const double> x,
                                        std::size_t pad_length) const {
  if (x.empty()) return {};
  const std::size_t n = x.size();
  const std::size_t pad = std::min(n - 1, pad_length);
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);

  std::vector<double> y = filter(ext);
  std::reverse(y.begin(), y.end());
  y = filter(y);
  std::reverse(y.begin(), y.end());
  return {y.begin() + static_cast<std::ptrdiff_t>(pad),
          y.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

SosFilter chebyshev1_highpass(int order, double ripple_db, double cutoff_hz,
                              double sample_rate) {
  validate(order, cutoff_hz, sample_rate);
  if (!(ripple_db > 0.0)) throw Error(Errc::kInvalidArgument, "ripple must be > 0 dB");
  const double fs2 = 2.0 * sample_rate;
  const double wa = fs2 * std::tan(std::numbers::pi * cutoff_hz / sample_rate);
  std::vector<cplx> zp;
  for (const cplx& p : chebyshev1_prototype(order, ripple_db)) {
    const cplx s = wa / p;  // low-pass to high-pass
    zp.push_back((fs2 + s) / (fs2 - s));
  }
  SosFilter f = assemble(zp, 1.0);
  const double eps2 = std::pow(10.0, ripple_db / 10.0) - 1.0;
  const double nyquist_gain = order % 2 == 0 ? 1.0 / std::sqrt(1.0 + eps2) : 1.0;
  normalize_gain(f, sample_rate / 2.0, sample_rate, nyquist_gain);
  return f;
}

SosFilter chebyshev1_lowpass(int order, double ripple_db, double cutoff_hz,
                             double sample_rate, double zero_radius) {
  validate(order, cutoff_hz, sample_rate);
  if (!(ripple_db > 0.0)) throw Error(Errc::kInvalidArgument, "ripple must be > 0 dB");
  if (!(zero_radius > 0.0) || !(zero_radius <= 1.0)) {
    throw Error(Errc::kInvalidArgument, "zero radius must be in (0, 1]");
  }
  const double fs2 = 2.0 * sample_rate;
  const double wa = fs2 * std::tan(std::numbers::pi * cutoff_hz / sample_rate);
  std::vector<cplx> zp;
  for (const cplx& p : chebyshev1_prototype(order, ripple_db)) {
    const cplx s = wa * p;
    zp.push_back((fs2 + s) / (fs2 - s));
  }
  SosFilter f = assemble(zp, -zero_radius);
  normalize_gain(f, 0.0, sample_rate, 1.0);
  return f;
}

}  // namespace tegg
