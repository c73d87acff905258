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

#ifndef HMUL_CORE_SHIFTMUL_HPP
#define HMUL_CORE_SHIFTMUL_HPP

#include <span>

#include "core/poly.hpp"

namespace hmul {

// Coefficientwise action: output(n) = phi(n) * x(n).
AnalyticPoly apply_multiplier(const MultiplierSeq& phi, const AnalyticPoly& x);

struct ShiftMaximalResult {
  // Quadrature of the pointwise sup over shifts k of |sum_n x(n) phi(n+k) z^n|.
  double value = 0.0;
  std::uint64_t grid_size = 0;
  // Shifts scanned: [0, k_max]; beyond support_max(phi) every shift vanishes.
  Index k_max = -1;
  // |value(grid) - value(2*grid)|
  double refinement_gap = 0.0;
};

ShiftMaximalResult shift_maximal(const MultiplierSeq& phi, const AnalyticPoly& x,
                                 std::uint64_t grid_size);

struct FamilyLowerBound {
  double sup_integral = 0.0;  // quadrature of the pointwise max over the family
  double certified = 0.0;     // sup_integral / 2
  double conservative = 0.0;  // sup_integral / 3
};

// Lower bound machinery for the kernel-extraction argument: a family indexed
// by K/2 < p < K, each of degree <= 2^{K-1}, bounds the third-order norm of
// the block-assembled symbol from below by (integral of the pointwise max)/2.
FamilyLowerBound m3_lower_from_family(std::span<const AnalyticPoly> family, int K,
                                      std::uint64_t grid_size);

// Windowed coefficient product n -> kernel(n - k) * phi(n); pure index
// arithmetic, exact, never touches a grid.
MultiplierSeq extract_shift_window(const MultiplierSeq& phi, const AnalyticPoly& kernel,
                                   Index k);

}  // namespace hmul

#endif
