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

#include "core/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "core/errors.hpp"

namespace hmul {

HankelTruncation build_hankel(const MultiplierSeq& phi, Index n, Index dense_cap) {
  require(n >= 1, Errc::invalid_argument, "truncation size must be >= 1");
  require(n <= dense_cap, Errc::size_limit, "truncation exceeds the dense cap");
  HankelTruncation h;
  h.n = n;
  h.source_support_max = phi.support_max();
  h.entries = Eigen::MatrixXcd::Zero(n, n);
  // Fill by anti-diagonal so each entry of phi is read once.
  for (const auto& [s, c] : phi.entries()) {
    if (s > 2 * (n - 1)) break;
    const Index i_lo = std::max<Index>(0, s - (n - 1));
    const Index i_hi = std::min<Index>(n - 1, s);
    for (Index i = i_lo; i <= i_hi; ++i) h.entries(i, s - i) = c;
  }
  return h;
}

cd DyadicFactorization::reconstruct(Index i, Index j) const {
  require(vectors_materialized, Errc::invalid_argument,
          "vector families were not materialized for this factorization");
  require(i >= 0 && j >= 0 && i < static_cast<Index>(x_vecs.size()) &&
              j < static_cast<Index>(x_vecs.size()),
          Errc::invalid_argument, "reconstruction index out of range");
  cd out(0.0, 0.0);
  // <x_i, e_j> is the j-th slot of x_i; likewise for the transposed term.
  if (const auto it = x_vecs[static_cast<std::size_t>(i)].find(j);
      it != x_vecs[static_cast<std::size_t>(i)].end()) {
    out += it->second;
  }
  if (const auto it = x_vecs[static_cast<std::size_t>(j)].find(i);
      it != x_vecs[static_cast<std::size_t>(j)].end()) {
    out += it->second;
  }
  if (i == j) {
    if (const auto it = y_vecs[static_cast<std::size_t>(i)].find(i);
        it != y_vecs[static_cast<std::size_t>(i)].end()) {
      out += it->second;
    }
  }
  return out;
}

DyadicFactorization dyadic_upper(const MultiplierSeq& phi, Index vector_cap) {
  DyadicFactorization out;
  const double abs0 = std::abs(phi.entry(0));

  // C = sup over dyadic blocks [2^m, 2^{m+1}) of the block l2 mass.
  std::unordered_map<int, double> block_sq;
  for (const auto& [n, c] : phi.entries()) {
    if (n == 0) continue;
    int m = 0;
    for (Index v = n; v > 1; v >>= 1) ++m;
    block_sq[m] += std::norm(c);
  }
  double c_sq = 0.0;
  for (const auto& [m, s] : block_sq) c_sq = std::max(c_sq, s);
  out.block_sup = std::sqrt(c_sq);
  out.statement_bound = 4.0 * out.block_sup + abs0;
  out.proof_bound = (2.0 * std::numbers::sqrt2 + 1.0) * out.block_sup + abs0;
  out.two_proxy = abs0 + out.block_sup;

  const Index smax = phi.support_max();
  if (smax >= 0 && smax <= vector_cap) {
    out.vectors_materialized = true;
    const std::size_t count = static_cast<std::size_t>(smax) + 1;
    out.x_vecs.assign(count, {});
    out.y_vecs.assign(count, {});
    for (Index i = 0; i <= smax; ++i) {
      // x_i picks up phi on [i, 2i), stored at slots k - i.
      auto lo = phi.entries().lower_bound(i);
      auto hi = phi.entries().lower_bound(2 * i);
      for (auto it = lo; it != hi; ++it) {
        out.x_vecs[static_cast<std::size_t>(i)].emplace(it->first - i, it->second);
      }
      const cd even = phi.entry(2 * i);
      if (even != cd(0.0, 0.0)) out.y_vecs[static_cast<std::size_t>(i)].emplace(i, even);
    }
  }
  return out;
}

namespace {

double best_over_signs(const Eigen::MatrixXd& A) {
  // For a fixed sign vector s on the rows the optimal column signs are free:
  // value(s) = sum_j |(A^T s)_j|. Enumerate s over the rows.
  const Index m = A.rows();
  const Index n = A.cols();
  double best = 0.0;
  std::vector<double> col(static_cast<std::size_t>(n));
  const std::uint64_t count = std::uint64_t(1) << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::fill(col.begin(), col.end(), 0.0);
    for (Index i = 0; i < m; ++i) {
      const double s = (mask >> i) & 1 ? 1.0 : -1.0;
      for (Index j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] += s * A(i, j);
    }
    double v = 0.0;
    for (double x : col) v += std::abs(x);
    best = std::max(best, v);
  }
  return best;
}

double best_over_phases(const Eigen::MatrixXcd& A, int resolution) {
  const Index m = A.rows();
  const Index n = A.cols();
  std::vector<cd> phases(static_cast<std::size_t>(resolution));
  for (int r = 0; r < resolution; ++r) {
    phases[static_cast<std::size_t>(r)] =
        std::polar(1.0, 2.0 * std::numbers::pi * r / resolution);
  }
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  std::vector<cd> col(static_cast<std::size_t>(n));
  double best = 0.0;
  while (true) {
    std::fill(col.begin(), col.end(), cd(0.0, 0.0));
    for (Index i = 0; i < m; ++i) {
      const cd s = phases[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      for (Index j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] += s * A(i, j);
    }
    double v = 0.0;
    for (const cd& x : col) v += std::abs(x);
    best = std::max(best, v);
    Index pos = 0;
    while (pos < m) {
      if (++idx[static_cast<std::size_t>(pos)] < resolution) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
  return best;
}

}  // namespace

InjectiveNormResult injective_norm_bruteforce(const Eigen::MatrixXcd& A, int phase_resolution,
                                              Index side_cap) {
  require(A.rows() >= 1 && A.cols() >= 1, Errc::invalid_argument, "empty matrix");
  require(A.rows() <= side_cap && A.cols() <= side_cap, Errc::size_limit,
          "matrix side exceeds the brute-force cap");
  require(phase_resolution >= 4, Errc::invalid_argument, "phase resolution must be >= 4");

  // Enumerate over the smaller side.
  const Eigen::MatrixXcd W = A.rows() <= A.cols() ? A : Eigen::MatrixXcd(A.transpose());
  const double scale = W.cwiseAbs().maxCoeff();
  InjectiveNormResult out;
  if (scale == 0.0) return out;

  const bool real = (W.imag().cwiseAbs().maxCoeff() <= 1e-15 * scale);
  if (real) {
    out.value = best_over_signs(W.real());
    out.refinement_bound = 0.0;
    return out;
  }
  const double work = std::pow(static_cast<double>(phase_resolution),
                               static_cast<double>(W.rows())) *
                      static_cast<double>(W.cols());
  require(work <= 2e8, Errc::size_limit,
          "phase grid too large; lower the resolution or the matrix size");
  out.value = best_over_phases(W, phase_resolution);
  out.refinement_bound =
      W.cwiseAbs().sum() * std::numbers::pi / static_cast<double>(phase_resolution);
  return out;
}

double lifting_norm_upper(const AnalyticPoly& p, int phase_resolution) {
  if (p.is_zero()) return 0.0;
  const Index deg = p.degree();
  const Index rows = deg / 2 + deg % 2 + 1;
  const Index cols = deg / 2 + 1;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, cols);
  for (const auto& [n, c] : p.coeffs()) A(n - n / 2, n / 2) = c;
  return injective_norm_bruteforce(A, phase_resolution).value;
}

}  // namespace hmul
