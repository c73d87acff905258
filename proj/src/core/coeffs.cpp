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

#include "core/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace hmul {

namespace {

double op_norm(const Eigen::MatrixXcd& M) { return M.operatorNorm(); }

void check_square(const Eigen::MatrixXcd& T, Index dim_cap) {
  require(T.rows() >= 1 && T.rows() == T.cols(), Errc::dimension_mismatch,
          "operator must be a nonempty square matrix");
  require(T.rows() <= dim_cap, Errc::size_limit, "operator dimension exceeds the cap");
}

}  // namespace

PowerBoundedOp power_bound_certify(const Eigen::MatrixXcd& T, int n_max, Index dim_cap) {
  check_square(T, dim_cap);
  require(n_max >= 1, Errc::invalid_argument, "horizon must be >= 1");

  PowerBoundedOp op;
  op.T = T;
  op.horizon = n_max;

  const double t1 = op_norm(T);
  if (t1 <= 1.0 + 1e-12) {
    // For a contraction the powers only shrink: sup_{n>=1} ||T^n|| = ||T||.
    op.contraction_branch = true;
    op.certified_c = t1;
    op.norm_at_horizon = t1;
    std::ostringstream os;
    os << "contraction: ||T|| = " << t1 << " <= 1, so ||T^n|| <= ||T|| for every n >= 1";
    op.tail_rationale = os.str();
    return op;
  }

  double scan_max = t1;
  Eigen::MatrixXcd P = T;
  double last = t1;
  for (int n = 2; n <= n_max; ++n) {
    P = P * T;
    last = op_norm(P);
    scan_max = std::max(scan_max, last);
  }
  if (!(last < 1.0)) {
    std::ostringstream os;
    os << "||T^" << n_max << "|| = " << last
       << " >= 1; enlarge the horizon or reject the input";
    fail(Errc::not_certifiable, os.str());
  }
  op.certified_c = scan_max;
  op.norm_at_horizon = last;
  std::ostringstream os;
  os << "scanned n = 1.." << n_max << " with max ||T^n|| = " << scan_max << "; ||T^" << n_max
     << "|| = " << last << " < 1 so ||T^n|| <= ||T^" << n_max
     << "||^(n div " << n_max << ") * max_{r<" << n_max << "} ||T^r|| for n > " << n_max;
  op.tail_rationale = os.str();
  return op;
}

MultiplierSeq coeff_sequence(const PowerBoundedOp& op, const Eigen::VectorXcd& xi,
                             const Eigen::VectorXcd& eta, Index N) {
  require(xi.size() == op.T.rows() && eta.size() == op.T.rows(), Errc::dimension_mismatch,
          "vector dimensions must match the operator");
  require(N >= 1, Errc::invalid_argument, "N must be >= 1");
  CoeffMap entries;
  Eigen::VectorXcd v = xi;
  for (Index n = 0; n <= N; ++n) {
    const cd value = eta.dot(v);  // <T^n xi, eta>
    if (value != cd(0.0, 0.0)) entries.emplace(n, value);
    if (n < N) v = op.T * v;
  }
  return MultiplierSeq(std::move(entries));
}

cd MdCertificate::eval(std::span<const Index> ts) const {
  require(static_cast<int>(ts.size()) == d, Errc::invalid_argument,
          "need exactly d exponents");
  Eigen::VectorXcd v = xi;
  // Stages apply right to left; each is a power of T, the outer two carry the
  // vector pairings.
  for (int stage = d - 1; stage >= 0; --stage) {
    const Index t = ts[static_cast<std::size_t>(stage)];
    require(t >= 0, Errc::invalid_argument, "exponents must be nonnegative");
    for (Index s = 0; s < t; ++s) v = T * v;
  }
  return eta.dot(v);
}

MdCertificate md_certificate(const PowerBoundedOp& op, const Eigen::VectorXcd& xi,
                             const Eigen::VectorXcd& eta, int d) {
  require(xi.size() == op.T.rows() && eta.size() == op.T.rows(), Errc::dimension_mismatch,
          "vector dimensions must match the operator");
  require(d >= 2, Errc::invalid_argument, "d must be >= 2");
  MdCertificate cert;
  cert.T = op.T;
  cert.xi = xi;
  cert.eta = eta;
  cert.d = d;
  cert.norm_bound = std::pow(op.pi_bound(), d) * xi.norm() * eta.norm();
  return cert;
}

VonNeumannCheck von_neumann_check(const AnalyticPoly& P, const Eigen::MatrixXcd& T,
                                  std::uint64_t grid_size) {
  check_square(T, kOperatorDimCap);
  require(op_norm(T) <= 1.0 + 1e-12, Errc::not_a_contraction, "||T|| exceeds 1");

  const Eigen::Index dim = T.rows();
  const Index deg = std::max<Index>(P.degree(), 0);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
  // Horner from the top coefficient down.
  for (Index n = deg; n >= 0; --n) {
    if (n < deg) H = H * T;
    const cd c = P.coeff(n);
    if (c != cd(0.0, 0.0)) H += c * Eigen::MatrixXcd::Identity(dim, dim);
  }
  VonNeumannCheck out;
  out.lhs = op_norm(H);
  out.rhs = P.is_zero() ? 0.0 : norm_inf_upper(P, grid_size);
  out.pass = out.lhs <= out.rhs * (1.0 + 1e-8);
  return out;
}

}  // namespace hmul
