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

#include "tegg/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "tegg/error.hpp"

namespace tegg {
namespace {

// The FFTW planner is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void load(fftw_complex* dst, std::span<const std::complex<double>> src) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i][0] = src[i].real();
    dst[i][1] = src[i].imag();
  }
}

void check_size(std::size_t n) {
  if (n < 2) throw Error(Errc::kInvalidArgument, "FFT size must be >= 2");
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

struct RealFft::Impl {
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  explicit Impl(std::size_t n) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    real = fftw_alloc_real(n);
    spec = fftw_alloc_complex(n / 2 + 1);
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, FFTW_ESTIMATE);
    inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, FFTW_ESTIMATE);
  }
  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(real);
    fftw_free(spec);
  }
};

RealFft::RealFft(std::size_t size) : size_(size) {
  check_size(size);
  impl_ = std::make_unique<Impl>(size);
}
RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

void RealFft::forward(std::span<const double> in,
                      std::span<std::complex<double>> out) {
  const std::size_t n = std::min(in.size(), size_);
  std::copy_n(in.begin(), n, impl_->real);
  std::fill(impl_->real + n, impl_->real + size_, 0.0);
  fftw_execute(impl_->fwd);
  const std::size_t nb = bins();
  for (std::size_t k = 0; k < nb && k < out.size(); ++k) {
    out[k] = {impl_->spec[k][0], impl_->spec[k][1]};
  }
}

void RealFft::inverse(std::span<const std::complex<double>> in,
                      std::span<double> out) {
  const std::size_t nb = bins();
  for (std::size_t k = 0; k < nb; ++k) {
    const std::complex<double> v = k < in.size() ? in[k] : 0.0;
    impl_->spec[k][0] = v.real();
    impl_->spec[k][1] = v.imag();
  }
  fftw_execute(impl_->inv);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_ && i < out.size(); ++i) {
    out[i] = impl_->real[i] * scale;
  }
}

struct ComplexFft::Impl {
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  explicit Impl(std::size_t n) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    buf = fftw_alloc_complex(n);
    fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    inv = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(buf);
  }
};

ComplexFft::ComplexFft(std::size_t size) : size_(size) {
  check_size(size);
  impl_ = std::make_unique<Impl>(size);
}
ComplexFft::~ComplexFft() = default;
ComplexFft::ComplexFft(ComplexFft&&) noexcept = default;
ComplexFft& ComplexFft::operator=(ComplexFft&&) noexcept = default;

void ComplexFft::forward(std::span<std::complex<double>> data) {
  if (data.size() != size_) throw Error(Errc::kDimensionMismatch, "FFT buffer size mismatch");
  load(impl_->buf, data);
  fftw_execute(impl_->fwd);
  for (std::size_t i = 0; i < size_; ++i) data[i] = {impl_->buf[i][0], impl_->buf[i][1]};
}

void ComplexFft::inverse(std::span<std::complex<double>> data) {
  if (data.size() != size_) throw Error(Errc::kDimensionMismatch, "FFT buffer size mismatch");
  load(impl_->buf, data);
  fftw_execute(impl_->inv);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    data[i] = {impl_->buf[i][0] * scale, impl_->buf[i][1] * scale};
  }
}

}  // namespace tegg
