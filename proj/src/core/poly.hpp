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

#ifndef HMUL_CORE_POLY_HPP
#define HMUL_CORE_POLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "core/fft.hpp"

namespace hmul {

using Index = std::int64_t;
// Sparse canonical form: stored coefficients are nonzero, absent means zero.
using CoeffMap = std::map<Index, cd>;

// Analytic trigonometric polynomial sum_n c(n) z^n, n >= 0, finite support.
class AnalyticPoly {
 public:
  AnalyticPoly() = default;
  explicit AnalyticPoly(CoeffMap coeffs);
  static AnalyticPoly monomial(Index n, cd c = cd(1.0, 0.0));

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  Index degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Index lowest_index() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }
  cd coeff(Index n) const;
  void set_coeff(Index n, cd c);
  std::size_t support_size() const { return coeffs_.size(); }
  double l2_norm() const;

 private:
  CoeffMap coeffs_;
};

// Finitely supported multiplier symbol phi : N -> C.
class MultiplierSeq {
 public:
  MultiplierSeq() = default;
  explicit MultiplierSeq(CoeffMap entries);
  static MultiplierSeq delta(Index n, cd c = cd(1.0, 0.0));
  static MultiplierSeq from_poly(const AnalyticPoly& p);
  AnalyticPoly to_poly() const { return AnalyticPoly(entries_); }

  const CoeffMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  // -1 for the zero sequence.
  Index support_max() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }
  cd entry(Index n) const;
  void set_entry(Index n, cd c);
  double l2_norm() const;

 private:
  CoeffMap entries_;
};

// Samples on the equispaced grid z_j = exp(2*pi*i*j/size).
struct TorusGrid {
  std::uint64_t size = 0;
  std::vector<cd> values;
  double oversample = 0.0;
};

struct RieszFactorPair {
  TorusGrid g;
  TorusGrid h;
  double l2g = 0.0;
  double l2h = 0.0;
  // max_j |x(z_j) - g(z_j) h(z_j)|
  double residual = 0.0;
  // | l2g*l2h - ||x||_1 | / ||x||_1 at the working grid
  double achieved_tol = 0.0;
};

enum class PNorm { one = 1, two = 2, inf = 0 };

TorusGrid eval_grid(const AnalyticPoly& p, std::uint64_t grid_size);

// p = two uses coefficients directly (grid_size ignored); p in {one, inf}
// needs a power-of-two grid with grid_size > 4*degree.
double norm_p(const AnalyticPoly& p, PNorm pn, std::uint64_t grid_size = 0);

// Certified upper bound on sup |p| from the grid max and the derivative bound
// ||p'|| <= degree * ||p||: divides by (1 - pi*degree/grid_size).
double norm_inf_upper(const AnalyticPoly& p, std::uint64_t grid_size);

// Factor x = g*h with g, h analytic, |g| = |h| = |x|^{1/2} on the circle, via
// the outer function exp((log|x| + i H[log|x|])/2); H is realized on the grid
// by the spectral sign multiplier. Zeros at the origin are split evenly
// between g and h; |x| is floored at 1e-12 * max|x| before the logarithm.
RieszFactorPair riesz_factor(const AnalyticPoly& x, std::uint64_t grid_size, double tol);

// Trapezoidal Fourier profile: 0 at 0, linear up to 1 at 2^K, flat through
// 2^{K+1}, linear back to 0 at 3*2^K. Difference of two Fejer kernels, so its
// L1 norm is at most 2.
AnalyticPoly lvp_kernel(int K);

// S(z) = sum_{i=0}^{q} z^i.
AnalyticPoly dirichlet_poly(Index q);

}  // namespace hmul

#endif
