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

#ifndef HMUL_CORE_FFT_HPP
#define HMUL_CORE_FFT_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace hmul {

using cd = std::complex<double>;

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::uint64_t next_power_of_two(std::uint64_t n);

// Radix-2 in-place transform for power-of-two sizes with a precomputed root
// table, so repeated transforms of one size pay the trigonometry once.
//
// forward:  b[j] = sum_n a[n] exp(+2*pi*i*j*n/N)   (synthesis at the N-th roots)
// inverse:  b[n] = (1/N) sum_j a[j] exp(-2*pi*i*j*n/N)
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  std::size_t size() const { return n_; }
  void forward(std::vector<cd>& a) const;
  void inverse(std::vector<cd>& a) const;

 private:
  void run(std::vector<cd>& a, bool conjugate) const;
  std::size_t n_;
  std::vector<cd> roots_;  // exp(+2*pi*i*k/n), k < n/2
};

// Summation helpers used by every quadrature in the project. Pairwise order
// keeps means of long arrays accurate and makes means of constant arrays exact
// on power-of-two grids.
double pairwise_sum(const double* v, std::size_t n);
double mean(const std::vector<double>& v);

}  // namespace hmul

#endif
