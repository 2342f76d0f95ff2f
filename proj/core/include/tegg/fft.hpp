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

#ifndef TEGG_FFT_HPP_
#define TEGG_FFT_HPP_

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace tegg {

// Real-input FFT of a fixed size backed by FFTW. An instance owns its plans
// and aligned work buffers, so one instance must not be shared between
// threads; separate instances are independent.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return size_; }
  std::size_t bins() const { return size_ / 2 + 1; }

  // Input shorter than size() is zero-padded. out must hold bins() values.
  void forward(std::span<const double> in, std::span<std::complex<double>> out);

  // Inverse of forward, including the 1/size normalization. out must hold
  // size() values.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out);

 private:
  struct Impl;
  std::size_t size_;
  std::unique_ptr<Impl> impl_;
};

// Full complex FFT (unnormalized forward, 1/size-normalized inverse).
class ComplexFft {
 public:
  explicit ComplexFft(std::size_t size);
  ~ComplexFft();
  ComplexFft(ComplexFft&&) noexcept;
  ComplexFft& operator=(ComplexFft&&) noexcept;
  ComplexFft(const ComplexFft&) = delete;
  ComplexFft& operator=(const ComplexFft&) = delete;

  std::size_t size() const { return size_; }
  void forward(std::span<std::complex<double>> data);
  void inverse(std::span<std::complex<double>> data);

 private:
  struct Impl;
  std::size_t size_;
  std::unique_ptr<Impl> impl_;
};

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace tegg

#endif  // TEGG_FFT_HPP_
