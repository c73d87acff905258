// Development scratch runner: computes values that later get frozen into
// tests. Not part of the deliverable build (replaced by the CLI).
#include <cstdio>
#include <cmath>
#include <numbers>

#include "core/coeffs.hpp"
#include "core/hankel.hpp"
#include "core/poly.hpp"
#include "core/sdp.hpp"
#include "core/shiftmul.hpp"
#include "core/witness.hpp"

using namespace hmul;

int main() {
  // Parseval check
  {
    CoeffMap m;
    std::srand(7);
    for (Index n = 0; n <= 64; ++n) {
      m[n] = cd((std::rand() % 1000) / 500.0 - 1.0, (std::rand() % 1000) / 500.0 - 1.0);
    }
    AnalyticPoly p{std::move(m)};
    TorusGrid g = eval_grid(p, 512);
    double sum_sq = 0.0;
    for (auto& v : g.values) sum_sq += std::norm(v);
    const double lhs = sum_sq / 512.0;
    const double rhs = p.l2_norm() * p.l2_norm();
    std::printf("parseval rel err = %.3e\n", std::abs(lhs - rhs) / rhs);
  }
  // norm1 of 1+z vs 4/pi
  {
    CoeffMap m{{0, cd(1, 0)}, {1, cd(1, 0)}};
    AnalyticPoly p{std::move(m)};
    for (std::uint64_t N : {256ULL, 1024ULL, 4096ULL, 16384ULL}) {
      std::printf("norm1(1+z) N=%llu err=%.3e\n", (unsigned long long)N,
                  std::abs(norm_p(p, PNorm::one, N) - 4.0 / std::numbers::pi));
    }
  }
  // riesz on (1+z)/2
  {
    CoeffMap m{{0, cd(0.5, 0)}, {1, cd(0.5, 0)}};
    AnalyticPoly p{std::move(m)};
    for (std::uint64_t N : {1024ULL, 8192ULL}) {
      auto rf = riesz_factor(p, N, 1e-3);
      std::printf("riesz(1+z)/2 N=%llu prod=%.10f (2/pi=%.10f) resid=%.3e achieved=%.3e\n",
                  (unsigned long long)N, rf.l2g * rf.l2h, 2.0 / std::numbers::pi,
                  rf.residual, rf.achieved_tol);
    }
  }
  // riesz on monomial
  {
    auto rf = riesz_factor(AnalyticPoly::monomial(7), 64, 1e-9);
    std::printf("riesz z^7: l2g=%.12f l2h=%.12f resid=%.3e\n", rf.l2g, rf.l2h, rf.residual);
  }
  // lvp L1 norms
  for (int K = 1; K <= 8; ++K) {
    AnalyticPoly x = lvp_kernel(K);
    const std::uint64_t N = next_power_of_two(4 * (std::uint64_t)x.degree() + 1);
    std::printf("lvp K=%d deg=%lld N=%llu L1=%.10f\n", K, (long long)x.degree(),
                (unsigned long long)N, norm_p(x, PNorm::one, N));
  }
  // gamma2 canonical
  {
    Eigen::MatrixXcd ones = Eigen::MatrixXcd::Constant(3, 3, cd(1, 0));
    auto c1 = gamma2_sdp(ones, 1e-7);
    std::printf("gamma2(ones3)=%.10f gap=%.2e steps=%d\n", c1.value, c1.gap, c1.newton_steps);
    Eigen::MatrixXcd anti(2, 2);
    anti << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0);
    auto c2 = gamma2_sdp(anti, 1e-7);
    std::printf("gamma2(antidiag)=%.10f gap=%.2e\n", c2.value, c2.gap);
    Eigen::MatrixXcd had(2, 2);
    had << cd(1, 0), cd(1, 0), cd(1, 0), cd(-1, 0);
    auto c3 = gamma2_sdp(had, 1e-7);
    std::printf("gamma2(hadamard)=%.10f (sqrt2=%.10f) gap=%.2e steps=%d\n", c3.value,
                std::numbers::sqrt2, c3.gap, c3.newton_steps);
    std::printf("  rownorm*colnorm=%.10f dual=%.10f\n", c3.row_norm_max * c3.col_norm_max,
                c3.dual_bound);
    Eigen::MatrixXcd XY = c3.primal_x * c3.primal_y;
    std::printf("  |XY-A|max=%.3e witness_mineig=%.3e\n", (XY - had).cwiseAbs().maxCoeff(),
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(c3.dual_witness)
                    .eigenvalues()(0));
  }
  // x2 lower
  {
    std::printf("x2(delta0)=%.8f\n", x2_lower_sdp(AnalyticPoly::monomial(0), 1e-6));
    std::printf("x2(delta3)=%.8f\n", x2_lower_sdp(AnalyticPoly::monomial(3), 1e-6));
    CoeffMap m{{0, cd(1, 0)}, {1, cd(1, 0)}};
    std::printf("x2((1,1))=%.10f\n", x2_lower_sdp(AnalyticPoly{std::move(m)}, 1e-7));
  }
  // cq values
  for (Index q : {1, 2, 3, 4, 8, 16}) {
    const std::uint64_t N = std::max<std::uint64_t>(512, next_power_of_two(8 * q + 1) * 2);
    auto e = cq_estimate(q, N);
    std::printf("cq q=%lld lower=%.10f upper=%.6f  (grid %llu)\n", (long long)q, e.lower,
                e.upper, (unsigned long long)N);
  }
  {
    auto e1 = cq_estimate(1, 512);
    std::printf("cq q=1 vs (4/pi)/sqrt2: err=%.3e\n",
                std::abs(e1.lower - (4.0 / std::numbers::pi) / std::numbers::sqrt2));
  }
  // separation
  {
    std::vector<int> Ks{6, 8, 10, 12};
    auto rep = separation_experiment(Ks);
    for (auto& row : rep.rows) {
      std::printf("K=%d q=%lld m2p=%.6f m3=%.8f ratio=%.8f sdp=%s\n", row.K,
                  (long long)row.q, row.m2_upper_proof, row.m3_lower, row.ratio,
                  row.m2_upper_sdp ? std::to_string(*row.m2_upper_sdp).c_str() : "-");
    }
    std::printf("fit exp=%.4f r2=%.5f\n", rep.fit_exponent, rep.fit_r2);
  }
  // power certify example
  {
    Eigen::MatrixXcd T(2, 2);
    T << cd(0.9, 0), cd(5, 0), cd(0, 0), cd(0.9, 0);
    auto op = power_bound_certify(T, 200);
    std::printf("certify jordan: c=%.10f horizon_norm=%.3e\n", op.certified_c,
                op.norm_at_horizon);
  }
  return 0;
}
