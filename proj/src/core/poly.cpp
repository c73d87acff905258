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

#include "core/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace hmul {

namespace {

CoeffMap canonicalize(CoeffMap m) {
  for (auto it = m.begin(); it != m.end();) {
    require(it->first >= 0, Errc::invalid_argument, "negative index in coefficient map");
    if (it->second == cd(0.0, 0.0)) {
      it = m.erase(it);
    } else {
      ++it;
    }
  }
  return m;
}

double l2_of(const CoeffMap& m) {
  std::vector<double> sq;
  sq.reserve(m.size());
  for (const auto& [n, c] : m) sq.push_back(std::norm(c));
  return std::sqrt(pairwise_sum(sq.data(), sq.size()));
}

void check_quadrature_grid(Index degree, std::uint64_t grid_size) {
  require(is_power_of_two(grid_size), Errc::not_power_of_two,
          "quadrature grid size must be a power of two");
  const Index deg = std::max<Index>(degree, 0);
  require(static_cast<Index>(grid_size) > 4 * deg && grid_size >= 4, Errc::grid_too_small,
          "quadrature grid must exceed 4x the degree");
}

std::vector<double> abs_values(const TorusGrid& grid) {
  std::vector<double> out(grid.values.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::abs(grid.values[j]);
  return out;
}

}  // namespace

AnalyticPoly::AnalyticPoly(CoeffMap coeffs) : coeffs_(canonicalize(std::move(coeffs))) {}

AnalyticPoly AnalyticPoly::monomial(Index n, cd c) {
  require(n >= 0, Errc::invalid_argument, "monomial index must be nonnegative");
  CoeffMap m;
  if (c != cd(0.0, 0.0)) m.emplace(n, c);
  return AnalyticPoly(std::move(m));
}

cd AnalyticPoly::coeff(Index n) const {
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cd(0.0, 0.0) : it->second;
}

void AnalyticPoly::set_coeff(Index n, cd c) {
  require(n >= 0, Errc::invalid_argument, "coefficient index must be nonnegative");
  if (c == cd(0.0, 0.0)) {
    coeffs_.erase(n);
  } else {
    coeffs_[n] = c;
  }
}

double AnalyticPoly::l2_norm() const { return l2_of(coeffs_); }

MultiplierSeq::MultiplierSeq(CoeffMap entries) : entries_(canonicalize(std::move(entries))) {}

MultiplierSeq MultiplierSeq::delta(Index n, cd c) {
  require(n >= 0, Errc::invalid_argument, "delta index must be nonnegative");
  CoeffMap m;
  if (c != cd(0.0, 0.0)) m.emplace(n, c);
  return MultiplierSeq(std::move(m));
}

MultiplierSeq MultiplierSeq::from_poly(const AnalyticPoly& p) {
  return MultiplierSeq(p.coeffs());
}

cd MultiplierSeq::entry(Index n) const {
  const auto it = entries_.find(n);
  return it == entries_.end() ? cd(0.0, 0.0) : it->second;
}

void MultiplierSeq::set_entry(Index n, cd c) {
  require(n >= 0, Errc::invalid_argument, "entry index must be nonnegative");
  if (c == cd(0.0, 0.0)) {
    entries_.erase(n);
  } else {
    entries_[n] = c;
  }
}

double MultiplierSeq::l2_norm() const { return l2_of(entries_); }

TorusGrid eval_grid(const AnalyticPoly& p, std::uint64_t grid_size) {
  require(is_power_of_two(grid_size), Errc::not_power_of_two,
          "grid size must be a power of two");
  const Index deg = std::max<Index>(p.degree(), 0);
  require(static_cast<Index>(grid_size) > 2 * deg, Errc::grid_too_small,
          "grid size must exceed twice the degree");
  std::vector<cd> buf(grid_size, cd(0.0, 0.0));
  for (const auto& [n, c] : p.coeffs()) buf[static_cast<std::size_t>(n)] = c;
  FftPlan plan(grid_size);
  plan.forward(buf);
  TorusGrid grid;
  grid.size = grid_size;
  grid.values = std::move(buf);
  grid.oversample = static_cast<double>(grid_size) / static_cast<double>(deg + 1);
  return grid;
}

double norm_p(const AnalyticPoly& p, PNorm pn, std::uint64_t grid_size) {
  if (pn == PNorm::two) return p.l2_norm();
  check_quadrature_grid(p.degree(), grid_size);
  if (p.is_zero()) return 0.0;
  const TorusGrid grid = eval_grid(p, grid_size);
  const std::vector<double> a = abs_values(grid);
  if (pn == PNorm::one) return mean(a);
  return *std::max_element(a.begin(), a.end());
}

double norm_inf_upper(const AnalyticPoly& p, std::uint64_t grid_size) {
  const double raw = norm_p(p, PNorm::inf, grid_size);
  const Index deg = std::max<Index>(p.degree(), 0);
  const double rho =
      std::numbers::pi * static_cast<double>(deg) / static_cast<double>(grid_size);
  require(rho < 1.0, Errc::grid_too_small, "grid too small for the derivative bound");
  return raw / (1.0 - rho);
}

RieszFactorPair riesz_factor(const AnalyticPoly& x, std::uint64_t grid_size, double tol) {
  require(!x.is_zero(), Errc::zero_input, "cannot factor the zero polynomial");
  require(tol > 0.0, Errc::invalid_argument, "tol must be positive");
  require(is_power_of_two(grid_size), Errc::not_power_of_two,
          "grid size must be a power of two");
  const Index deg = x.degree();
  require(static_cast<Index>(grid_size) >= 8 * std::max<Index>(deg, 1), Errc::grid_too_small,
          "factorization grid must be at least 8x the degree");

  // Split off the zero at the origin; the remainder has nonzero constant term.
  const Index v = x.lowest_index();
  CoeffMap shifted;
  for (const auto& [n, c] : x.coeffs()) shifted.emplace(n - v, c);
  const AnalyticPoly core{CoeffMap(shifted)};

  const std::uint64_t n = grid_size;
  const TorusGrid base = eval_grid(core, n);
  double max_abs = 0.0;
  for (const cd& z : base.values) max_abs = std::max(max_abs, std::abs(z));
  const double floor = 1e-12 * max_abs;

  // log|core| on the grid, then its analytic completion A with Re A = log|core|.
  std::vector<cd> logs(n);
  for (std::size_t j = 0; j < n; ++j) {
    logs[j] = cd(std::log(std::max(std::abs(base.values[j]), floor)), 0.0);
  }
  FftPlan plan(n);
  plan.inverse(logs);  // Fourier coefficients of the (real) log profile
  std::vector<cd> analytic(n, cd(0.0, 0.0));
  analytic[0] = logs[0];
  for (std::size_t m = 1; m < n / 2; ++m) analytic[m] = 2.0 * logs[m];
  analytic[n / 2] = logs[n / 2];  // Nyquist term is real; keep it on the analytic side
  plan.forward(analytic);

  const Index vg = (v + 1) / 2;  // ceil
  const Index vh = v / 2;        // floor
  TorusGrid g, h;
  g.size = h.size = n;
  g.oversample = h.oversample = static_cast<double>(n) / static_cast<double>(deg + 1);
  g.values.resize(n);
  h.values.resize(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cd half_outer = std::exp(0.5 * analytic[j]);
    const double theta = step * static_cast<double>(j);
    const cd wg = std::polar(1.0, theta * static_cast<double>(vg % static_cast<Index>(n)));
    const cd wh = std::polar(1.0, theta * static_cast<double>(vh % static_cast<Index>(n)));
    h.values[j] = wh * half_outer;
    g.values[j] = wg * base.values[j] / half_outer;
  }

  RieszFactorPair out;
  out.l2g = std::sqrt(mean([&] {
    std::vector<double> sq(n);
    for (std::size_t j = 0; j < n; ++j) sq[j] = std::norm(g.values[j]);
    return sq;
  }()));
  out.l2h = std::sqrt(mean([&] {
    std::vector<double> sq(n);
    for (std::size_t j = 0; j < n; ++j) sq[j] = std::norm(h.values[j]);
    return sq;
  }()));

  const TorusGrid full = eval_grid(x, n);
  double resid = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    resid = std::max(resid, std::abs(full.values[j] - g.values[j] * h.values[j]));
  }
  out.residual = resid;

  const double norm1 = mean(abs_values(full));
  out.achieved_tol = std::abs(out.l2g * out.l2h - norm1) / norm1;
  out.g = std::move(g);
  out.h = std::move(h);
  require(out.achieved_tol <= tol && out.residual <= tol * norm1, Errc::factorization_diverged,
          "outer-function regularization did not reach the requested tolerance");
  return out;
}

AnalyticPoly lvp_kernel(int K) {
  require(K >= 1, Errc::invalid_argument, "K must be >= 1");
  require(K <= 60, Errc::invalid_argument, "3*2^K would overflow the index type");
  const Index base = Index(1) << K;
  CoeffMap m;
  const double scale = 1.0 / static_cast<double>(base);
  for (Index i = 1; i <= base; ++i) m.emplace(i, cd(static_cast<double>(i) * scale, 0.0));
  for (Index i = base + 1; i <= 2 * base; ++i) m.emplace(i, cd(1.0, 0.0));
  for (Index i = 2 * base + 1; i < 3 * base; ++i) {
    m.emplace(i, cd(static_cast<double>(3 * base - i) * scale, 0.0));
  }
  return AnalyticPoly(std::move(m));
}

AnalyticPoly dirichlet_poly(Index q) {
  require(q >= 1, Errc::invalid_argument, "q must be >= 1");
  CoeffMap m;
  for (Index i = 0; i <= q; ++i) m.emplace(i, cd(1.0, 0.0));
  return AnalyticPoly(std::move(m));
}

}  // namespace hmul
