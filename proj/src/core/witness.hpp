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

#ifndef HMUL_CORE_WITNESS_HPP
#define HMUL_CORE_WITNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/poly.hpp"

namespace hmul {

// 8q equispaced points recover the sup norm of any degree-q polynomial up to
// the factor a = 1/(1 - pi/4), by the derivative bound ||F'|| <= q ||F||.
struct BernsteinGrid {
  Index q = 0;
  std::vector<double> thetas;  // points are exp(i*theta)
  double a = 0.0;
  double b = 8.0;  // |points| <= b*q
};

// Spot-verifies the recovery property on 20 seeded random degree-q
// polynomials at construction; a violation throws PropertyCheckFailed.
BernsteinGrid bernstein_grid(Index q, std::uint64_t check_seed = 0x5eed5eedULL);

struct CqEstimate {
  Index q = 0;
  double lower = 0.0;  // empirical, from the rotated Dirichlet family
  double upper = 0.0;  // sqrt(q)
  std::string family_descriptor;
};

// Family: the q rotations S(xi_j z)/sqrt(q+1) with xi_j the q-th roots of
// unity -- q polynomials of degree q and unit l2 norm, hence admissible.
CqEstimate cq_estimate(Index q, std::uint64_t grid_size);

std::vector<AnalyticPoly> rotated_dirichlet_family(Index q);

// Block-embedded symbol: block p (K/2 < p < K) occupies [2^{2p}, 2^{2p}+q]
// and carries the coefficients of family[p - K/2 - 1]; the result is scaled
// by 1/4. Sparse; the 2^{2K}-sized ambient interval is never materialized.
MultiplierSeq build_witness(int K, std::span<const AnalyticPoly> family);

struct SeparationRow {
  int K = 0;
  Index q = 0;
  double m2_upper_proof = 0.0;
  std::optional<double> m2_upper_sdp;  // small K only
  double m3_lower = 0.0;
  double ratio = 0.0;
};

struct SeparationReport {
  std::vector<SeparationRow> rows;
  double fit_exponent = 0.0;  // least-squares slope of log(ratio) vs log(q), q >= 2
  double fit_r2 = 0.0;
};

struct SeparationOptions {
  std::uint64_t grid_size = 0;  // 0: per-row automatic (power of two > 8q)
  double sdp_tol = 1e-6;
  int sdp_max_K = 4;  // rows with K <= this also get the dense SDP cross-check
};

SeparationReport separation_experiment(std::span<const int> Ks,
                                       const SeparationOptions& opts = {});

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

}  // namespace hmul

#endif
