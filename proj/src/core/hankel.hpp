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

#ifndef HMUL_CORE_HANKEL_HPP
#define HMUL_CORE_HANKEL_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "core/poly.hpp"

namespace hmul {

struct HankelTruncation {
  Eigen::MatrixXcd entries;  // entries(i, j) = phi(i + j)
  Index n = 0;
  Index source_support_max = -1;
};

inline constexpr Index kDefaultDenseCap = 4096;

HankelTruncation build_hankel(const MultiplierSeq& phi, Index n,
                              Index dense_cap = kDefaultDenseCap);

// Explicit factorization of the Hankel form of phi into the dyadic-block
// families x_i = sum_{i <= k < 2i} phi(k) e_{k-i} and y_i = phi(2i) e_i, with
// C = sup_m (sum_{2^m <= i < 2^{m+1}} |phi(i)|^2)^{1/2}.
struct DyadicFactorization {
  // Vector families are materialized only when support_max fits vector_cap;
  // the bounds below are always computed (they touch only the sparse entries).
  std::vector<CoeffMap> x_vecs;
  std::vector<CoeffMap> y_vecs;
  bool vectors_materialized = false;
  double block_sup = 0.0;        // C
  double statement_bound = 0.0;  // 4C + |phi(0)|
  double proof_bound = 0.0;      // (2*sqrt(2)+1)C + |phi(0)|
  double two_proxy = 0.0;        // |phi(0)| + C

  // <x_i, e_j> + <x_j, e_i> + <y_i, e_j> from the stored vectors.
  cd reconstruct(Index i, Index j) const;
};

DyadicFactorization dyadic_upper(const MultiplierSeq& phi, Index vector_cap = kDefaultDenseCap);

struct InjectiveNormResult {
  double value = 0.0;
  // Zero for the exact real sign enumeration; for the complex phase grid this
  // bounds how far the reported value can sit below the true supremum.
  double refinement_bound = 0.0;
};

// sup over unit-modulus vectors s, t of |sum_ij A_ij s_i t_j|. Real matrices
// are solved exactly by sign enumeration over the smaller side; complex ones
// scan a phase grid with `phase_resolution` points per coordinate.
InjectiveNormResult injective_norm_bruteforce(const Eigen::MatrixXcd& A,
                                              int phase_resolution = 16,
                                              Index side_cap = 12);

// Upper estimate (only) for the lifted convolution norm of p: places each
// coefficient on the near-diagonal cell (ceil(n/2), floor(n/2)) inside the
// triangle i+j <= degree and takes the injective norm of that lifting.
double lifting_norm_upper(const AnalyticPoly& p, int phase_resolution = 16);

}  // namespace hmul

#endif
