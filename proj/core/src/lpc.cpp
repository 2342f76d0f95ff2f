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

#include "tegg/lpc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "tegg/error.hpp"
#include "tegg/framing.hpp"

namespace tegg {

LpcSolution lpc_autocorr(std::span<const double> frame, int order) {
  if (order < 0 || static_cast<std::size_t>(order) >= frame.size()) {
    throw Error(Errc::kInvalidArgument,
                "LPC order " + std::to_string(order) + " must be below the frame length " +
                    std::to_string(frame.size()));
  }
  const std::size_t n = frame.size();
  const auto p = static_cast<std::size_t>(order);
  std::vector<double> r(p + 1, 0.0);
  for (std::size_t lag = 0; lag <= p; ++lag) {
    double acc = 0.0;
    for (std::size_t i = lag; i < n; ++i) acc += frame[i] * frame[i - lag];
    r[lag] = acc;
  }
  if (!(r[0] > 0.0) || !std::isfinite(r[0])) {
    throw Error(Errc::kDegenerateFrame, "all-zero frame");
  }

  std::vector<double> a(p + 1, 0.0), prev(p + 1, 0.0);
  a[0] = 1.0;
  double err = r[0];
  for (std::size_t i = 1; i <= p; ++i) {
    double acc = r[i];
    for (std::size_t j = 1; j < i; ++j) acc += a[j] * r[i - j];
    const double k = -acc / err;
    if (!std::isfinite(k) || std::abs(k) >= 1.0) {
      throw Error(Errc::kDegenerateFrame, "singular autocorrelation");
    }
    prev = a;
    for (std::size_t j = 1; j < i; ++j) a[j] = prev[j] + k * prev[i - j];
    a[i] = k;
    err *= 1.0 - k * k;
    if (!(err > 0.0)) throw Error(Errc::kDegenerateFrame, "singular autocorrelation");
  }
  return {std::move(a), err / static_cast<double>(n)};
}

std::vector<double> inverse_filter(std::span<const double> x,
                                   std::span<const double> coeffs) {
  if (coeffs.empty()) throw Error(Errc::kInvalidArgument, "empty coefficient vector");
  std::vector<double> e(x.size(), 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double acc = 0.0;
    const std::size_t kmax = std::min(coeffs.size() - 1, t);
    for (std::size_t k = 0; k <= kmax; ++k) acc += coeffs[k] * x[t - k];
    e[t] = acc;
  }
  return e;
}

std::vector<double> all_pole_filter(std::span<const double> x,
                                    std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs[0] == 0.0) {
    throw Error(Errc::kInvalidArgument, "leading coefficient must be nonzero");
  }
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double acc = x[t];
    const std::size_t kmax = std::min(coeffs.size() - 1, t);
    for (std::size_t k = 1; k <= kmax; ++k) acc -= coeffs[k] * y[t - k];
    y[t] = acc / coeffs[0];
  }
  return y;
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs[0] == 0.0) {
    throw Error(Errc::kInvalidArgument, "leading coefficient must be nonzero");
  }
  const auto p = static_cast<Eigen::Index>(coeffs.size() - 1);
  if (p == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    companion(0, j) = -coeffs[static_cast<std::size_t>(j + 1)] / coeffs[0];
  }
  for (Eigen::Index i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  roots.reserve(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

std::vector<double> polynomial_from_roots(std::span<const std::complex<double>> roots) {
  std::vector<std::complex<double>> poly{1.0};
  for (const auto& r : roots) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k >= 1; --k) poly[k] -= r * poly[k - 1];
  }
  std::vector<double> out(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) out[k] = poly[k].real();
  return out;
}

std::vector<double> ensure_stable(std::span<const double> coeffs,
                                  double max_radius) {
  if (coeffs.empty() || coeffs[0] != 1.0) {
    throw Error(Errc::kInvalidArgument, "coefficients must start with a[0] = 1");
  }
  if (!(max_radius > 0.0) || max_radius > 1.0) {
    throw Error(Errc::kInvalidArgument, "stability radius must be in (0, 1]");
  }
  auto roots = polynomial_roots(coeffs);
  const bool stable = std::all_of(roots.begin(), roots.end(), [&](const auto& r) {
    return std::abs(r) <= max_radius;
  });
  if (stable) return {coeffs.begin(), coeffs.end()};

  for (auto& r : roots) {
    const double mag = std::abs(r);
    if (mag > 1.0) r = 1.0 / std::conj(r);
    if (std::abs(r) > max_radius) r *= max_radius / std::abs(r);
  }
  return polynomial_from_roots(roots);
}

int default_vocal_tract_order(int sample_rate) { return 2 + sample_rate / 1000; }

namespace {

std::vector<double> convolve_poly(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

class WindowedLpc {
 public:
  WindowedLpc(std::size_t skip, std::size_t length, WindowKind kind)
      : skip_(skip), window_(make_window(kind, length)),
        buffer_(length) {}

  std::vector<double> operator()(std::span<const double> x, int order) {
    for (std::size_t i = 0; i < window_.size(); ++i) buffer_[i] = x[skip_ + i] * window_[i];
    return lpc_autocorr(buffer_, order).coeffs;
  }

 private:
  std::size_t skip_;
  std::vector<double> window_;
  std::vector<double> buffer_;
};

}  // namespace

LpcEstimate gfm_iaif(std::span<const double> frame, int sample_rate,
                     const GfmIaifConfig& config) {
  const int nv = config.vocal_tract_order > 0 ? config.vocal_tract_order
                                              : default_vocal_tract_order(sample_rate);
  const int ng = config.glottis_order;
  if (ng < 1) throw Error(Errc::kInvalidArgument, "glottis order must be >= 1");
  if (std::all_of(frame.begin(), frame.end(), [](double v) { return v == 0.0; })) {
    throw Error(Errc::kDegenerateFrame, "all-zero frame");
  }

  const auto pre = static_cast<std::size_t>(nv + 1);
  std::vector<double> x_gvl(pre + frame.size());
  for (std::size_t i = 0; i < pre; ++i) {
    const double t = pre == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(pre - 1);
    x_gvl[i] = -frame[0] + 2.0 * frame[0] * t;
  }
  std::copy(frame.begin(), frame.end(), x_gvl.begin() + static_cast<std::ptrdiff_t>(pre));

  LpcEstimate est;
  est.a_l = {1.0, -config.lip_radiation};
  const std::vector<double> x_gv = all_pole_filter(x_gvl, est.a_l);

  WindowedLpc lpc(pre, frame.size(), config.window);

  std::vector<double> ag1 = lpc(x_gv, 1);
  for (int i = 1; i < ng; ++i) {
    const std::vector<double> x = inverse_filter(x_gv, ag1);
    ag1 = convolve_poly(ag1, lpc(x, 1));
  }

  const std::vector<double> av1 = lpc(inverse_filter(x_gv, ag1), nv);
  est.a_g = lpc(inverse_filter(x_gv, av1), ng);
  est.a_v = lpc(inverse_filter(x_gv, est.a_g), nv);

  est.a_v = ensure_stable(est.a_v, config.stability_radius);
  est.a_g = ensure_stable(est.a_g, config.stability_radius);
  return est;
}

}  // namespace tegg
