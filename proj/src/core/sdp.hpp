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

#ifndef HMUL_CORE_SDP_HPP
#define HMUL_CORE_SDP_HPP

#include <Eigen/Dense>

#include "core/hankel.hpp"
#include "core/poly.hpp"

namespace hmul {

inline constexpr Index kDefaultSdpCap = 600;

struct SdpOptions {
  Index size_cap = kDefaultSdpCap;
  int max_outer = 90;
  int max_newton = 60;
  double mu_shrink = 0.2;
};

// Output of the factorization-norm program
//   minimize t  s.t.  [[D_r, A], [A^*, D_c]] >= 0,  diag <= t.
// `value` is the primal objective at termination (an upper bound on the true
// optimum); `dual_bound` comes from the rescaled inverse of the slack matrix,
// which is feasible for the dual by construction, so it is a certified lower
// bound. `gap = value - dual_bound`.
struct Gamma2Certificate {
  double value = 0.0;
  Eigen::MatrixXcd primal_x;  // rows of X carry the left factor family
  Eigen::MatrixXcd primal_y;  // columns of Y carry the right factor family
  double row_norm_max = 0.0;
  double col_norm_max = 0.0;
  Eigen::MatrixXcd dual_witness;  // PSD, unit trace
  double dual_bound = 0.0;
  double gap = 0.0;
  int newton_steps = 0;
};

Gamma2Certificate gamma2_sdp(const Eigen::MatrixXcd& A, double tol,
                             const SdpOptions& opts = {});
Gamma2Certificate gamma2_sdp(const HankelTruncation& h, double tol,
                             const SdpOptions& opts = {});

// sup Re sum_n g(n) conj(phi(n)) over phi supported on [0, degree(g)] whose
// Hankel form has factorization norm <= 1. The returned value is attained by
// a strictly feasible phi, hence certified as a lower bound.
double x2_lower_sdp(const AnalyticPoly& g, double tol, const SdpOptions& opts = {});

}  // namespace hmul

#endif
