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

#ifndef HMUL_CORE_COEFFS_HPP
#define HMUL_CORE_COEFFS_HPP

#include <Eigen/Dense>
#include <span>
#include <string>

#include "core/poly.hpp"

namespace hmul {

inline constexpr Index kOperatorDimCap = 64;

// A matrix together with a certificate that sup_{n>=1} ||T^n|| <= certified_c.
// Contractions are certified directly; otherwise a finite scan must reach
// ||T^{horizon}|| < 1, after which submultiplicativity covers the tail:
// ||T^n|| <= ||T^{horizon}||^floor(n/horizon) * max_{r<horizon} ||T^r||.
struct PowerBoundedOp {
  Eigen::MatrixXcd T;
  int horizon = 0;
  double certified_c = 0.0;
  bool contraction_branch = false;
  double norm_at_horizon = 0.0;
  std::string tail_rationale;

  // Uniform bound over every nonnegative power, including T^0 = I.
  double pi_bound() const { return certified_c < 1.0 ? 1.0 : certified_c; }
};

PowerBoundedOp power_bound_certify(const Eigen::MatrixXcd& T, int n_max,
                                   Index dim_cap = kOperatorDimCap);

// phi(n) = <T^n xi, eta> for 0 <= n <= N, by iterated application.
MultiplierSeq coeff_sequence(const PowerBoundedOp& op, const Eigen::VectorXcd& xi,
                             const Eigen::VectorXcd& eta, Index N);

// Length-d factorization certificate built from a power-bound certificate:
// the outer stages pair with eta and xi, the middle stages apply powers of T.
// norm_bound multiplies the per-stage sup-norm bounds, each at most
// pi_bound() times the relevant vector norm.
struct MdCertificate {
  Eigen::MatrixXcd T;
  Eigen::VectorXcd xi, eta;
  int d = 0;
  double norm_bound = 0.0;

  cd eval(std::span<const Index> ts) const;
};

MdCertificate md_certificate(const PowerBoundedOp& op, const Eigen::VectorXcd& xi,
                             const Eigen::VectorXcd& eta, int d);

struct VonNeumannCheck {
  double lhs = 0.0;  // ||P(T)||
  double rhs = 0.0;  // certified upper bound on sup |P| over the circle
  bool pass = false;
};

VonNeumannCheck von_neumann_check(const AnalyticPoly& P, const Eigen::MatrixXcd& T,
                                  std::uint64_t grid_size);

}  // namespace hmul

#endif
