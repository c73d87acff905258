/*
 * Copyright 2026 The hmul Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "core/fft.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace hmul {

std::uint64_t next_power_of_two(std::uint64_t n) {
  std::uint64_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  require(is_power_of_two(n), Errc::not_power_of_two, "FFT size must be a power of two");
  roots_.resize(n / 2);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    roots_[k] = std::polar(1.0, step * static_cast<double>(k));
  }
}

void FftPlan::run(std::vector<cd>& a, bool conjugate) const {
  const std::size_t n = n_;
  require(a.size() == n, Errc::invalid_argument, "FFT buffer size mismatch");
  if (n == 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        cd w = roots_[k * stride];
        if (conjugate) w = std::conj(w);
        const cd u = a[i + k];
        const cd v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

void FftPlan::forward(std::vector<cd>& a) const { run(a, false); }

void FftPlan::inverse(std::vector<cd>& a) const {
  run(a, true);
  const double inv = 1.0 / static_cast<double>(n_);
  for (auto& v : a) v *= inv;
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return v[0];
  if (n == 2) return v[0] + v[1];
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return pairwise_sum(v.data(), v.size()) / static_cast<double>(v.size());
}

}  // namespace hmul
