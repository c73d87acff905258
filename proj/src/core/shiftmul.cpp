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

#include "core/shiftmul.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace hmul {

AnalyticPoly apply_multiplier(const MultiplierSeq& phi, const AnalyticPoly& x) {
  CoeffMap out;
  for (const auto& [n, c] : x.coeffs()) {
    const cd v = phi.entry(n) * c;
    if (v != cd(0.0, 0.0)) out.emplace(n, v);
  }
  return AnalyticPoly(std::move(out));
}

namespace {

// |values| of the shifted product on the grid. Single-coefficient products
// have constant modulus on the circle; fill it directly so degenerate cases
// stay exact.
void accumulate_shift_max(const CoeffMap& coeffs, const FftPlan& plan,
                          std::vector<cd>& scratch, std::vector<double>& running_max) {
  const std::size_t n = plan.size();
  if (coeffs.size() == 1) {
    const double a = std::abs(coeffs.begin()->second);
    for (std::size_t j = 0; j < n; ++j) running_max[j] = std::max(running_max[j], a);
    return;
  }
  std::fill(scratch.begin(), scratch.end(), cd(0.0, 0.0));
  for (const auto& [idx, c] : coeffs) scratch[static_cast<std::size_t>(idx)] = c;
  plan.forward(scratch);
  for (std::size_t j = 0; j < n; ++j) {
    running_max[j] = std::max(running_max[j], std::abs(scratch[j]));
  }
}

double shift_sup_quadrature(const MultiplierSeq& phi, const AnalyticPoly& x,
                            std::uint64_t grid_size) {
  const Index k_max = phi.support_max();
  const FftPlan plan(grid_size);
  const int workers = std::min<std::int64_t>(thread_count(), k_max + 1);
  std::vector<std::vector<double>> partial(
      std::max(workers, 1), std::vector<double>(grid_size, 0.0));
  const Index chunk = workers > 0 ? (k_max + workers) / workers : 1;
  parallel_for(workers, [&](std::int64_t w) {
    std::vector<cd> scratch(grid_size);
    const Index lo = static_cast<Index>(w) * chunk;
    const Index hi = std::min<Index>(k_max, lo + chunk - 1);
    for (Index k = lo; k <= hi; ++k) {
      CoeffMap coeffs;
      for (const auto& [n, c] : x.coeffs()) {
        const cd p = phi.entry(n + k);
        if (p != cd(0.0, 0.0)) coeffs.emplace(n, c * p);
      }
      if (coeffs.empty()) continue;
      accumulate_shift_max(coeffs, plan, scratch, partial[static_cast<std::size_t>(w)]);
    }
  });
  std::vector<double>& acc = partial[0];
  for (int w = 1; w < workers; ++w) {
    for (std::uint64_t j = 0; j < grid_size; ++j) acc[j] = std::max(acc[j], partial[w][j]);
  }
  return mean(acc);
}

}  // namespace

ShiftMaximalResult shift_maximal(const MultiplierSeq& phi, const AnalyticPoly& x,
                                 std::uint64_t grid_size) {
  require(is_power_of_two(grid_size), Errc::not_power_of_two,
          "grid size must be a power of two");
  const Index deg = std::max<Index>(x.degree(), 0);
  require(static_cast<Index>(grid_size) > 4 * deg && grid_size >= 4, Errc::grid_too_small,
          "grid size must exceed 4x the degree");

  ShiftMaximalResult out;
  out.grid_size = grid_size;
  out.k_max = phi.support_max();
  if (phi.is_zero() || x.is_zero()) return out;
  out.value = shift_sup_quadrature(phi, x, grid_size);
  const double refined = shift_sup_quadrature(phi, x, 2 * grid_size);
  out.refinement_gap = std::abs(out.value - refined);
  return out;
}

FamilyLowerBound m3_lower_from_family(std::span<const AnalyticPoly> family, int K,
                                      std::uint64_t grid_size) {
  require(K >= 4 && K % 2 == 0, Errc::invalid_argument, "K must be an even integer >= 4");
  const Index expected = K / 2 - 1;  // indices K/2 < p < K
  require(static_cast<Index>(family.size()) == expected, Errc::family_length_mismatch,
          "family length must match the index range");
  const Index degree_cap = Index(1) << (K - 1);
  Index max_deg = 0;
  for (const AnalyticPoly& f : family) {
    require(f.degree() <= degree_cap, Errc::degree_violation,
            "family member degree exceeds 2^(K-1)");
    max_deg = std::max(max_deg, std::max<Index>(f.degree(), 0));
  }
  require(is_power_of_two(grid_size), Errc::not_power_of_two,
          "grid size must be a power of two");
  require(static_cast<Index>(grid_size) > 4 * max_deg && grid_size >= 4, Errc::grid_too_small,
          "grid size must exceed 4x the family degree");

  std::vector<double> running_max(grid_size, 0.0);
  const FftPlan plan(grid_size);
  std::vector<cd> scratch(grid_size);
  for (const AnalyticPoly& f : family) {
    if (f.is_zero()) continue;
    accumulate_shift_max(f.coeffs(), plan, scratch, running_max);
  }
  FamilyLowerBound out;
  out.sup_integral = mean(running_max);
  out.certified = out.sup_integral / 2.0;
  out.conservative = out.sup_integral / 3.0;
  return out;
}

MultiplierSeq extract_shift_window(const MultiplierSeq& phi, const AnalyticPoly& kernel,
                                   Index k) {
  require(k >= 0, Errc::invalid_argument, "shift must be nonnegative");
  CoeffMap out;
  for (const auto& [n, c] : phi.entries()) {
    if (n < k) continue;
    const cd w = kernel.coeff(n - k);
    const cd v = w * c;
    if (v != cd(0.0, 0.0)) out.emplace(n, v);
  }
  return MultiplierSeq(std::move(out));
}

}  // namespace hmul
