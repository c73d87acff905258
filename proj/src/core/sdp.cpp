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

#include "core/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "core/errors.hpp"

namespace hmul {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// The factorization-norm program
//
//   minimize t  s.t.  [[P, A], [A^*, Q]] >= 0,  P, Q Hermitian, diag <= t
//
// has the Lagrange dual
//
//   maximize 2 Re tr(L^* A)  s.t.  [[diag(l_r), L], [L^*, diag(l_c)]] >= 0,
//                                  sum l = 1,
//
// whose partial maximization over L collapses to diagonal scalings:
//
//   gamma_2(A) = max_{p, q probability vectors} || diag(sqrt p) A diag(sqrt q) ||_tr.
//
// The solver ascends that concave objective with the multiplicative balance
// map p <- diag(U S U^*)/tr(S) (from the SVD U S V^* of the scaled matrix),
// Anderson-accelerated. Every iterate yields a certified two-sided bracket:
// the scaled SVD rebuilds an exact factorization (upper bound) and an explicit
// PSD dual witness with unit trace (lower bound).

struct ScaledSvd {
  VectorXd p, q;
  Eigen::BDCSVD<MatrixXcd> svd;
  double trace_value = 0.0;  // dual objective at (p, q)
  VectorXd du, dv;           // diag(U S U^*), diag(V S V^*)

  void compute(const MatrixXcd& A, const VectorXd& pin, const VectorXd& qin) {
    p = pin;
    q = qin;
    MatrixXcd M = A;
    for (Eigen::Index i = 0; i < M.rows(); ++i) M.row(i) *= std::sqrt(p(i));
    for (Eigen::Index j = 0; j < M.cols(); ++j) M.col(j) *= std::sqrt(q(j));
    svd.compute(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const VectorXd& sig = svd.singularValues();
    trace_value = sig.sum();
    const Eigen::Index r = sig.size();
    du = VectorXd::Zero(M.rows());
    dv = VectorXd::Zero(M.cols());
    for (Eigen::Index k = 0; k < r; ++k) {
      du += sig(k) * svd.matrixU().col(k).cwiseAbs2();
      dv += sig(k) * svd.matrixV().col(k).cwiseAbs2();
    }
  }

  // maxrow(X) * maxcol(Y) for the exact factorization X = D_p^{-1/2} U S^{1/2},
  // Y = S^{1/2} V^* D_q^{-1/2}; rows with no mass contribute nothing.
  double factor_bound() const {
    double rmax = 0.0, cmax = 0.0;
    for (Eigen::Index i = 0; i < du.size(); ++i) {
      if (du(i) > 0.0) rmax = std::max(rmax, du(i) / p(i));
    }
    for (Eigen::Index j = 0; j < dv.size(); ++j) {
      if (dv(j) > 0.0) cmax = std::max(cmax, dv(j) / q(j));
    }
    return std::sqrt(rmax) * std::sqrt(cmax);
  }
};

VectorXd clip_normalize(VectorXd v, double floor = 1e-16) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = std::max(v(i), floor);
    sum += v(i);
  }
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    return VectorXd::Constant(v.size(), 1.0 / static_cast<double>(v.size()));
  }
  return v / sum;
}

}  // namespace

Gamma2Certificate gamma2_sdp(const Eigen::MatrixXcd& A, double tol, const SdpOptions& opts) {
  require(A.rows() >= 1 && A.cols() >= 1, Errc::invalid_argument, "empty matrix");
  require(tol > 0.0 && tol <= 1e-2, Errc::invalid_argument, "tol must lie in (0, 1e-2]");
  require(A.rows() <= opts.size_cap && A.cols() <= opts.size_cap, Errc::size_limit,
          "matrix side exceeds the SDP cap");

  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();

  Gamma2Certificate cert;
  if (A.cwiseAbs().maxCoeff() == 0.0) {
    cert.primal_x = MatrixXcd::Zero(m, 1);
    cert.primal_y = MatrixXcd::Zero(1, n);
    cert.dual_witness = MatrixXcd::Identity(m + n, m + n) / static_cast<double>(m + n);
    return cert;
  }

  // Mass-weighted start.
  VectorXd p(m), q(n);
  for (Eigen::Index i = 0; i < m; ++i) p(i) = A.row(i).norm() + 1e-12;
  for (Eigen::Index j = 0; j < n; ++j) q(j) = A.col(j).norm() + 1e-12;
  p = clip_normalize(p / p.sum());
  q = clip_normalize(q / q.sum());

  ScaledSvd state;
  state.compute(A, p, q);

  double best_lower = state.trace_value;
  double best_upper = state.factor_bound();
  VectorXd lower_p = p, lower_q = q, upper_p = p, upper_q = q;

  // Anderson history over the concatenated (p, q) iterates. Accelerated steps
  // need not be monotone in the objective; the bracket bookkeeping keeps the
  // result certified regardless of the path taken.
  const int hist_cap = 8;
  std::vector<VectorXd> zs, gs;
  int iterations = 0;
  const int max_iter = std::max(2000, opts.max_outer * opts.max_newton * 4);

  const double inner_tol = 0.6 * tol;
  while (best_upper - best_lower > inner_tol * best_upper && iterations < max_iter) {
    ++iterations;
    const double f = state.trace_value;
    VectorXd z(m + n);
    z.head(m) = state.p;
    z.tail(n) = state.q;
    VectorXd g(m + n);
    g.head(m) = state.du / f;
    g.tail(n) = state.dv / f;

    zs.push_back(z);
    gs.push_back(g);
    if (static_cast<int>(zs.size()) > hist_cap + 1) {
      zs.erase(zs.begin());
      gs.erase(gs.begin());
    }

    VectorXd cand = g;
    const int h = static_cast<int>(zs.size()) - 1;
    if (h >= 1 && iterations % 64 != 0) {
      // Type-II Anderson mixing on the fixed-point residual.
      MatrixXd dR(m + n, h);
      for (int c = 0; c < h; ++c) {
        dR.col(c) = (gs[c + 1] - zs[c + 1]) - (gs[c] - zs[c]);
      }
      const VectorXd r = g - z;
      const VectorXd gamma = dR.colPivHouseholderQr().solve(r);
      VectorXd acc = g;
      for (int c = 0; c < h; ++c) acc -= gamma(c) * (gs[c + 1] - gs[c]);
      if (acc.allFinite()) cand = acc;
    }

    VectorXd pn = clip_normalize(cand.head(m));
    VectorXd qn = clip_normalize(cand.tail(n));
    state.compute(A, pn, qn);
    if (!std::isfinite(state.trace_value) || state.trace_value < 0.25 * f) {
      // Accelerated step went wild; restart from the plain balance map.
      pn = clip_normalize(g.head(m));
      qn = clip_normalize(g.tail(n));
      state.compute(A, pn, qn);
      zs.clear();
      gs.clear();
    }
    if (state.trace_value > best_lower) {
      best_lower = state.trace_value;
      lower_p = state.p;
      lower_q = state.q;
    }
    const double ub = state.factor_bound();
    if (ub < best_upper) {
      best_upper = ub;
      upper_p = state.p;
      upper_q = state.q;
    }
  }
  require(best_upper - best_lower <= tol * best_upper, Errc::sdp_nonconvergent,
          "iteration cap hit before the gap closed");

  cert.newton_steps = iterations;
  cert.value = best_upper;
  cert.gap = best_upper - best_lower;

  // Dual witness at the best lower point: corner blocks diag(p/2), diag(q/2),
  // off-diagonal -(1/2) D_sqrt(p) U V^* D_sqrt(q). PSD with unit trace, and its
  // pairing with A reproduces the trace-norm value.
  state.compute(A, lower_p, lower_q);
  {
    const Eigen::Index r = state.svd.singularValues().size();
    MatrixXcd C = state.svd.matrixU().leftCols(r) * state.svd.matrixV().leftCols(r).adjoint();
    MatrixXcd W(m + n, m + n);
    W.setZero();
    for (Eigen::Index i = 0; i < m; ++i) W(i, i) = 0.5 * state.p(i);
    for (Eigen::Index j = 0; j < n; ++j) W(m + j, m + j) = 0.5 * state.q(j);
    MatrixXcd off = -0.5 * C;
    for (Eigen::Index i = 0; i < m; ++i) off.row(i) *= std::sqrt(state.p(i));
    for (Eigen::Index j = 0; j < n; ++j) off.col(j) *= std::sqrt(state.q(j));
    W.block(0, m, m, n) = off;
    W.block(m, 0, n, m) = off.adjoint();
    cert.dual_witness = W;
    cert.dual_bound = best_lower;
  }

  // Primal factors: the paired form X = A D_sq(q) V S^{-1/2},
  // Y = S^{-1/2} U^* D_sq(p) A reconstructs A = X*Y without dividing by the
  // scaling weights. Columns are ordered by decreasing singular value and
  // truncated at 1e-10 of the largest, backing off to full rank when the
  // dropped directions would break the reconstruction. If weights collapsed
  // so far that the scaled SVD subspaces turn noisy, rebuild at floored
  // weights and pull any over-norm rows back with minimum-norm least squares.
  {
    const double scale = A.cwiseAbs().maxCoeff();
    const auto assemble = [&](const VectorXd& pw, const VectorXd& qw, MatrixXcd* X,
                              MatrixXcd* Y) {
      ScaledSvd local;
      local.compute(A, pw, qw);
      const VectorXd& sig = local.svd.singularValues();
      const double smax = sig.size() > 0 ? sig(0) : 0.0;
      MatrixXcd AQ = A;
      for (Eigen::Index j = 0; j < n; ++j) AQ.col(j) *= std::sqrt(qw(j));
      MatrixXcd PA = A;
      for (Eigen::Index i = 0; i < m; ++i) PA.row(i) *= std::sqrt(pw(i));
      const MatrixXcd B1 = AQ * local.svd.matrixV();
      const MatrixXcd B2 = local.svd.matrixU().adjoint() * PA;
      const auto build = [&](double cutoff) {
        Eigen::Index rank = 0;
        for (Eigen::Index k = 0; k < sig.size(); ++k) {
          if (sig(k) > cutoff * smax) ++rank;
        }
        rank = std::max<Eigen::Index>(rank, 1);
        X->resize(m, rank);
        Y->resize(rank, n);
        for (Eigen::Index k = 0; k < rank; ++k) {
          const double root = std::sqrt(std::max(sig(k), 1e-300));
          X->col(k) = B1.col(k) / root;
          Y->row(k) = B2.row(k) / root;
        }
      };
      build(1e-10);
      if ((*X * *Y - A).cwiseAbs().maxCoeff() > 1e-9 * scale) build(1e-290);
    };

    MatrixXcd X, Y;
    assemble(upper_p, upper_q, &X, &Y);
    if ((X * Y - A).cwiseAbs().maxCoeff() > 1e-8 * scale) {
      const VectorXd pf = clip_normalize(upper_p, 1e-9);
      const VectorXd qf = clip_normalize(upper_q, 1e-9);
      assemble(pf, qf, &X, &Y);
      // Rows that the floor pushed above the certified bound get replaced by
      // the minimum-norm solution of X_i Y = A_i.
      const double cmax = Y.colwise().norm().maxCoeff();
      const double row_cap = best_upper * (1.0 + 1e-9) / std::max(cmax, 1e-300);
      Eigen::CompleteOrthogonalDecomposition<MatrixXcd> ydec(Y.transpose().eval());
      for (Eigen::Index i = 0; i < m; ++i) {
        if (X.row(i).norm() > row_cap) {
          X.row(i) = ydec.solve(A.row(i).transpose()).transpose();
        }
      }
    }
    cert.primal_x = X;
    cert.primal_y = Y;
    cert.row_norm_max = X.rowwise().norm().maxCoeff();
    cert.col_norm_max = Y.colwise().norm().maxCoeff();
  }
  return cert;
}

Gamma2Certificate gamma2_sdp(const HankelTruncation& h, double tol, const SdpOptions& opts) {
  return gamma2_sdp(h.entries, tol, opts);
}

namespace {

// One Hermitian basis matrix of the x2 program, stored as entry triplets.
struct BasisEntry {
  Eigen::Index row, col;
  cd weight;
};
using Basis = std::vector<BasisEntry>;

}  // namespace

// Restricted-support lower estimator: maximize Re sum g(k) conj(phi(k)) over
// phi on [0, D] whose Hankel form has factorization norm <= 1; the membership
// is encoded exactly with full Hermitian corner blocks P, Q, diag <= 1:
//   [[P, H(phi)], [H(phi)^*, Q]] >= 0.
double x2_lower_sdp(const AnalyticPoly& g, double tol, const SdpOptions& opts) {
  require(tol > 0.0 && tol <= 1e-2, Errc::invalid_argument, "tol must lie in (0, 1e-2]");
  if (g.is_zero()) return 0.0;
  const Index D = g.degree();
  require(D <= opts.size_cap / 2, Errc::size_limit, "degree exceeds half the SDP cap");

  const Eigen::Index nb = D + 1;  // Hankel side
  const Eigen::Index N = 2 * nb;

  std::vector<Basis> bases;
  VectorXd obj_coeffs;
  std::vector<Eigen::Index> cap_vars;  // variables with the d <= 1 barrier

  {
    std::vector<double> obj;
    // phi real / imaginary parts
    for (Eigen::Index k = 0; k < nb; ++k) {
      Basis re, im;
      for (Eigen::Index i = 0; i <= k; ++i) {
        const Eigen::Index r = i;
        const Eigen::Index c = nb + (k - i);
        re.push_back({r, c, cd(1.0, 0.0)});
        re.push_back({c, r, cd(1.0, 0.0)});
        im.push_back({r, c, cd(0.0, 1.0)});
        im.push_back({c, r, cd(0.0, -1.0)});
      }
      bases.push_back(std::move(re));
      obj.push_back(g.coeff(k).real());
      bases.push_back(std::move(im));
      obj.push_back(g.coeff(k).imag());
    }
    // Hermitian corner blocks P (offset 0) and Q (offset nb)
    for (int blk = 0; blk < 2; ++blk) {
      const Eigen::Index off = blk == 0 ? 0 : nb;
      for (Eigen::Index i = 0; i < nb; ++i) {
        bases.push_back({{off + i, off + i, cd(1.0, 0.0)}});
        obj.push_back(0.0);
        cap_vars.push_back(static_cast<Eigen::Index>(bases.size()) - 1);
        for (Eigen::Index j = i + 1; j < nb; ++j) {
          bases.push_back({{off + i, off + j, cd(1.0, 0.0)}, {off + j, off + i, cd(1.0, 0.0)}});
          obj.push_back(0.0);
          bases.push_back(
              {{off + i, off + j, cd(0.0, 1.0)}, {off + j, off + i, cd(0.0, -1.0)}});
          obj.push_back(0.0);
        }
      }
    }
    obj_coeffs = Eigen::Map<VectorXd>(obj.data(), static_cast<Eigen::Index>(obj.size()));
  }

  const Eigen::Index nv = static_cast<Eigen::Index>(bases.size());
  const auto assemble = [&](const VectorXd& x) {
    MatrixXcd M = MatrixXcd::Zero(N, N);
    for (Eigen::Index a = 0; a < nv; ++a) {
      if (x(a) == 0.0) continue;
      for (const BasisEntry& e : bases[static_cast<std::size_t>(a)]) {
        M(e.row, e.col) += x(a) * e.weight;
      }
    }
    return M;
  };

  VectorXd x = VectorXd::Zero(nv);
  for (Eigen::Index v : cap_vars) x(v) = 0.5;

  double mu = std::max(1.0, obj_coeffs.cwiseAbs().sum());
  const double nu = static_cast<double>(N + static_cast<Eigen::Index>(cap_vars.size()));

  const auto barrier_value = [&](const VectorXd& xt, double* out) {
    for (Eigen::Index v : cap_vars) {
      if (!(1.0 - xt(v) > 0.0)) return false;
    }
    Eigen::LLT<MatrixXcd> llt(assemble(xt));
    if (llt.info() != Eigen::Success) return false;
    double ld = 0.0;
    const auto& packed = llt.matrixLLT();
    for (Eigen::Index i = 0; i < N; ++i) {
      const double dvalue = std::real(packed(i, i));
      if (!(dvalue > 0.0) || !std::isfinite(dvalue)) return false;
      ld += std::log(dvalue);
    }
    ld *= 2.0;
    double s = -obj_coeffs.dot(xt) / mu - ld;
    for (Eigen::Index v : cap_vars) s -= std::log(1.0 - xt(v));
    *out = s;
    return true;
  };

  for (int outer = 0; outer < opts.max_outer; ++outer) {
    for (int inner = 0; inner < opts.max_newton; ++inner) {
      const MatrixXcd M = assemble(x);
      Eigen::LLT<MatrixXcd> llt(M);
      require(llt.info() == Eigen::Success, Errc::sdp_nonconvergent,
              "interior point left the cone");
      const MatrixXcd Minv = llt.solve(MatrixXcd::Identity(N, N));

      VectorXd grad = -obj_coeffs / mu;
      for (Eigen::Index a = 0; a < nv; ++a) {
        cd tr(0.0, 0.0);
        for (const BasisEntry& e : bases[static_cast<std::size_t>(a)]) {
          tr += e.weight * Minv(e.col, e.row);
        }
        grad(a) -= std::real(tr);
      }
      MatrixXd H(nv, nv);
      for (Eigen::Index a = 0; a < nv; ++a) {
        for (Eigen::Index b = 0; b <= a; ++b) {
          // tr(M^-1 B_a M^-1 B_b) over the entry pairs.
          cd acc(0.0, 0.0);
          for (const BasisEntry& ea : bases[static_cast<std::size_t>(a)]) {
            for (const BasisEntry& eb : bases[static_cast<std::size_t>(b)]) {
              acc += ea.weight * eb.weight * Minv(ea.col, eb.row) * Minv(eb.col, ea.row);
            }
          }
          H(a, b) = std::real(acc);
          H(b, a) = H(a, b);
        }
      }
      for (Eigen::Index v : cap_vars) {
        const double r = 1.0 / (1.0 - x(v));
        grad(v) += r;
        H(v, v) += r * r;
      }

      Eigen::LDLT<MatrixXd> ldlt(H);
      VectorXd step = ldlt.solve(-grad);
      if (!step.allFinite()) break;
      const double decrement = -grad.dot(step);
      if (decrement <= 1e-11) break;

      double alpha = 1.0;
      for (Eigen::Index v : cap_vars) {
        if (step(v) > 0.0) alpha = std::min(alpha, 0.99 * (1.0 - x(v)) / step(v));
      }
      double f0;
      require(barrier_value(x, &f0), Errc::sdp_nonconvergent, "infeasible iterate");
      bool moved = false;
      for (int bt = 0; bt < 60; ++bt) {
        const VectorXd xt = x + alpha * step;
        double f1;
        if (barrier_value(xt, &f1) && f1 <= f0 - 1e-4 * alpha * decrement) {
          x = xt;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    const double value = obj_coeffs.dot(x);
    if (mu * nu <= tol * std::max(1.0, std::abs(value))) return value;
    mu = std::max(mu * opts.mu_shrink, 1e-16);
  }
  fail(Errc::sdp_nonconvergent, "iteration cap hit before the gap closed");
}

}  // namespace hmul
