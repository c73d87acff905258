// Stress scratch: SDP convergence on the acceptance-suite workload.
#include <chrono>
#include <cstdio>
#include <random>

#include "core/hankel.hpp"
#include "core/sdp.hpp"
#include "core/witness.hpp"

using namespace hmul;

int main() {
  std::mt19937_64 rng(20260810);
  auto uni = [&]() { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };

  auto t0 = std::chrono::steady_clock::now();
  int worst_iters = 0;
  double worst_gap_rel = 0.0;
  double max_resid = 0.0, min_wit_eig = 1.0, max_entry_violation = 0.0;
  int fails = 0;
  for (int trial = 0; trial < 100; ++trial) {
    CoeffMap m;
    for (Index n = 0; n <= 64; ++n) {
      if ((rng() & 3) == 0) continue;  // sparsify a quarter
      m[n] = cd(uni(), uni());
    }
    MultiplierSeq phi{std::move(m)};
    auto H = build_hankel(phi, phi.support_max() + 1);
    try {
      auto cert = gamma2_sdp(H, 1e-6);
      worst_iters = std::max(worst_iters, cert.newton_steps);
      worst_gap_rel = std::max(worst_gap_rel, cert.gap / cert.value);
      max_resid = std::max(
          max_resid,
          (cert.primal_x * cert.primal_y - H.entries).cwiseAbs().maxCoeff());
      min_wit_eig = std::min(min_wit_eig,
                             Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
                                 cert.dual_witness)
                                 .eigenvalues()(0));
      max_entry_violation =
          std::max(max_entry_violation, H.entries.cwiseAbs().maxCoeff() - cert.value);
      // sandwich
      auto dy = dyadic_upper(phi);
      if (cert.value > dy.proof_bound + 1e-6) {
        std::printf("SANDWICH FAIL trial %d: %f > %f\n", trial, cert.value, dy.proof_bound);
      }
    } catch (const std::exception& e) {
      ++fails;
      std::printf("trial %d failed: %s\n", trial, e.what());
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  std::printf("100 Hankel 65x65 SDPs: %.1fs worst_iters=%d worst_relgap=%.2e\n",
              std::chrono::duration<double>(t1 - t0).count(), worst_iters, worst_gap_rel);
  std::printf("max |XY-A| = %.2e  min witness eig = %.2e  entry-bound violation = %.2e  fails=%d\n",
              max_resid, min_wit_eig, max_entry_violation, fails);

  // witness at K=4
  {
    auto fam = rotated_dirichlet_family(1);
    auto wit = build_witness(4, fam);
    auto H = build_hankel(wit, wit.support_max() + 1);
    auto t2 = std::chrono::steady_clock::now();
    auto cert = gamma2_sdp(H, 1e-6);
    auto t3 = std::chrono::steady_clock::now();
    std::printf("witness K=4: value=%.8f gap=%.2e iters=%d (%.2fs)\n", cert.value, cert.gap,
                cert.newton_steps, std::chrono::duration<double>(t3 - t2).count());
  }

  // submultiplicativity quick check
  {
    int bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
      CoeffMap ma, mb;
      for (Index n = 0; n <= 32; ++n) {
        if ((rng() & 1) == 0) ma[n] = cd(uni(), uni());
        if ((rng() & 1) == 0) mb[n] = cd(uni(), uni());
      }
      MultiplierSeq a{std::move(ma)}, b{std::move(mb)};
      CoeffMap mp;
      for (const auto& [n, c] : a.entries()) {
        const cd v = c * b.entry(n);
        if (v != cd(0, 0)) mp[n] = v;
      }
      MultiplierSeq prod{std::move(mp)};
      if (prod.is_zero()) continue;
      const double va = gamma2_sdp(build_hankel(a, a.support_max() + 1), 1e-7).value;
      const double vb = gamma2_sdp(build_hankel(b, b.support_max() + 1), 1e-7).value;
      const double vp = gamma2_sdp(build_hankel(prod, prod.support_max() + 1), 1e-7).value;
      if (vp > va * vb * (1.0 + 1e-6)) {
        ++bad;
        std::printf("submult fail: %f > %f * %f\n", vp, va, vb);
      }
    }
    std::printf("submultiplicativity: %d violations\n", bad);
  }
  return 0;
}
