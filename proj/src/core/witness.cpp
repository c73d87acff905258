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

#include "core/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "core/errors.hpp"
#include "core/hankel.hpp"
#include "core/parallel.hpp"
#include "core/sdp.hpp"
#include "core/shiftmul.hpp"

namespace hmul {

namespace {

cd horner_eval(const AnalyticPoly& p, cd z) {
  // Sparse Horner over the support gaps.
  cd acc(0.0, 0.0);
  Index prev = -1;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (prev >= 0) {
      Index gap = prev - it->first;
      for (Index s = 0; s < gap; ++s) acc *= z;
    }
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) {
    for (Index s = 0; s < prev; ++s) acc *= z;
  }
  return acc;
}

}  // namespace

BernsteinGrid bernstein_grid(Index q, std::uint64_t check_seed) {
  require(q >= 1, Errc::invalid_argument, "q must be >= 1");
  BernsteinGrid grid;
  grid.q = q;
  grid.a = 1.0 / (1.0 - std::numbers::pi / 4.0);
  grid.b = 8.0;
  const Index count = 8 * q;
  grid.thetas.resize(static_cast<std::size_t>(count));
  for (Index l = 0; l < count; ++l) {
    grid.thetas[static_cast<std::size_t>(l)] =
        2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(count);
  }

  // Spot check: sup-norm recovery on random degree-q polynomials.
  std::mt19937_64 rng(check_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::uint64_t ref_grid = next_power_of_two(static_cast<std::uint64_t>(8 * (q + 1)));
  for (int trial = 0; trial < 20; ++trial) {
    CoeffMap m;
    for (Index nidx = 0; nidx <= q; ++nidx) m[nidx] = cd(gauss(rng), gauss(rng));
    const AnalyticPoly f{std::move(m)};
    const double sup_upper = norm_inf_upper(f, ref_grid);
    double grid_max = 0.0;
    for (double theta : grid.thetas) {
      grid_max = std::max(grid_max, std::abs(horner_eval(f, std::polar(1.0, theta))));
    }
    require(sup_upper <= grid.a * grid_max, Errc::property_check_failed,
            "sup-norm recovery failed on a random polynomial");
  }
  return grid;
}

std::vector<AnalyticPoly> rotated_dirichlet_family(Index q) {
  require(q >= 1, Errc::invalid_argument, "q must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(q + 1));
  std::vector<AnalyticPoly> family;
  family.reserve(static_cast<std::size_t>(q));
  for (Index j = 1; j <= q; ++j) {
    CoeffMap m;
    for (Index i = 0; i <= q; ++i) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(i * j) / static_cast<double>(q);
      m[i] = std::polar(scale, angle);
    }
    family.emplace_back(std::move(m));
  }
  return family;
}

CqEstimate cq_estimate(Index q, std::uint64_t grid_size) {
  require(q >= 1, Errc::invalid_argument, "q must be >= 1");
  require(is_power_of_two(grid_size), Errc::not_power_of_two,
          "grid size must be a power of two");
  require(static_cast<Index>(grid_size) > 8 * q, Errc::grid_too_small,
          "grid must exceed 8x the degree parameter");

  const std::uint64_t N = grid_size;
  const double inv_root = 1.0 / std::sqrt(static_cast<double>(q + 1));
  std::vector<double> max_abs(N, 0.0);

  if (N % static_cast<std::uint64_t>(q) == 0) {
    // Rotations by q-th roots of unity are integer index shifts on this grid.
    const TorusGrid s = eval_grid(dirichlet_poly(q), N);
    std::vector<double> abs_s(N);
    for (std::uint64_t j = 0; j < N; ++j) abs_s[j] = std::abs(s.values[j]);
    const std::uint64_t stride = N / static_cast<std::uint64_t>(q);
    parallel_for(static_cast<std::int64_t>(N), [&](std::int64_t j) {
      double best = 0.0;
      std::uint64_t idx = static_cast<std::uint64_t>(j);
      for (Index l = 1; l <= q; ++l) {
        idx += stride;
        if (idx >= N) idx -= N;
        best = std::max(best, abs_s[idx]);
      }
      max_abs[static_cast<std::size_t>(j)] = best;
    });
  } else {
    // Closed form of the Dirichlet modulus |sin((q+1)a/2)/sin(a/2)|.
    parallel_for(static_cast<std::int64_t>(N), [&](std::int64_t j) {
      double best = 0.0;
      for (Index l = 1; l <= q; ++l) {
        const double alpha = 2.0 * std::numbers::pi *
                             (static_cast<double>(j) / static_cast<double>(N) +
                              static_cast<double>(l) / static_cast<double>(q));
        const double den = std::sin(alpha / 2.0);
        double v;
        if (std::abs(den) < 1e-12) {
          v = static_cast<double>(q + 1);
        } else {
          v = std::abs(std::sin((q + 1) * alpha / 2.0) / den);
        }
        best = std::max(best, v);
      }
      max_abs[static_cast<std::size_t>(j)] = best;
    });
  }

  CqEstimate est;
  est.q = q;
  est.lower = mean(max_abs) * inv_root;
  est.upper = std::sqrt(static_cast<double>(q));
  est.family_descriptor =
      "rotated-dirichlet;q=" + std::to_string(q) + ";grid=" + std::to_string(N);
  return est;
}

MultiplierSeq build_witness(int K, std::span<const AnalyticPoly> family) {
  require(K >= 4 && K % 2 == 0, Errc::invalid_argument, "K must be an even integer >= 4");
  require(K <= 30, Errc::invalid_argument, "2^{2K} would overflow the index type");
  const Index q = K / 2 - 1;
  require(static_cast<Index>(family.size()) == q, Errc::family_length_mismatch,
          "family length must equal K/2 - 1");
  // Applicability gate for the kernel-extraction bound downstream.
  require(q <= (Index(1) << (K - 1)), Errc::internal, "degree gate violated");
  for (const AnalyticPoly& f : family) {
    require(f.degree() <= q, Errc::degree_violation, "family member degree exceeds q");
    require(f.l2_norm() <= 1.0 + 1e-12, Errc::norm_violation,
            "family member l2 norm exceeds 1");
  }
  CoeffMap entries;
  for (int p = K / 2 + 1; p < K; ++p) {
    const Index base = Index(1) << (2 * p);
    const AnalyticPoly& f = family[static_cast<std::size_t>(p - K / 2 - 1)];
    for (const auto& [n, c] : f.coeffs()) {
      const cd v = c * 0.25;
      if (v != cd(0.0, 0.0)) entries.emplace(base + n, v);
    }
  }
  return MultiplierSeq(std::move(entries));
}

LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  require(xs.size() == ys.size(), Errc::invalid_argument, "mismatched fit inputs");
  require(xs.size() >= 2, Errc::invalid_argument, "need at least two points to fit");
  const std::size_t n = xs.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(xs[i] > 0.0 && ys[i] > 0.0, Errc::invalid_argument,
            "log-log fit needs positive data");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  require(sxx > 0.0, Errc::invalid_argument, "degenerate abscissae");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = fit.intercept + fit.slope * lx[i];
    ss_res += (ly[i] - pred) * (ly[i] - pred);
  }
  fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

SeparationReport separation_experiment(std::span<const int> Ks, const SeparationOptions& opts) {
  require(!Ks.empty(), Errc::invalid_argument, "need at least one K");
  for (int K : Ks) {
    require(K >= 4 && K % 2 == 0, Errc::invalid_argument, "every K must be even and >= 4");
  }
  SeparationReport report;
  report.rows.resize(Ks.size());
  parallel_for(static_cast<std::int64_t>(Ks.size()), [&](std::int64_t i) {
    const int K = Ks[static_cast<std::size_t>(i)];
    const Index q = K / 2 - 1;
    SeparationRow row;
    row.K = K;
    row.q = q;
    const auto family = rotated_dirichlet_family(q);
    std::uint64_t grid = opts.grid_size;
    if (grid == 0) {
      grid = std::max<std::uint64_t>(
          512, next_power_of_two(static_cast<std::uint64_t>(8 * q + 1)));
    }
    const FamilyLowerBound flb =
        m3_lower_from_family(std::span<const AnalyticPoly>(family), K, grid);
    const MultiplierSeq wit = build_witness(K, family);
    // The witness scales the family by 1/4, so its lower bound scales the same way.
    row.m3_lower = flb.certified / 4.0;
    const DyadicFactorization dy = dyadic_upper(wit, /*vector_cap=*/-1);
    row.m2_upper_proof = dy.proof_bound;
    if (K <= opts.sdp_max_K) {
      const HankelTruncation h = build_hankel(wit, wit.support_max() + 1);
      row.m2_upper_sdp = gamma2_sdp(h, opts.sdp_tol).value;
    }
    row.ratio = row.m3_lower / row.m2_upper_proof;
    report.rows[static_cast<std::size_t>(i)] = std::move(row);
  });

  std::vector<double> qs, ratios;
  for (const SeparationRow& row : report.rows) {
    if (row.q >= 2) {
      qs.push_back(static_cast<double>(row.q));
      ratios.push_back(row.ratio);
    }
  }
  if (qs.size() >= 2) {
    const LogLogFit fit = fit_loglog(qs, ratios);
    report.fit_exponent = fit.slope;
    report.fit_r2 = fit.r2;
  }
  return report;
}

}  // namespace hmul
