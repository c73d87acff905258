// Debug probe for the factor-reconstruction residual.
#include <cstdio>
#include <random>

#include "core/hankel.hpp"
#include "core/sdp.hpp"

using namespace hmul;

int main() {
  std::mt19937_64 rng(20260810);
  auto uni = [&]() { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  for (int trial = 0; trial < 100; ++trial) {
    CoeffMap m;
    for (Index n = 0; n <= 64; ++n) {
      if ((rng() & 3) == 0) continue;
      m[n] = cd(uni(), uni());
    }
    MultiplierSeq phi{std::move(m)};
    auto H = build_hankel(phi, phi.support_max() + 1);
    auto cert = gamma2_sdp(H, 1e-6);
    const double resid = (cert.primal_x * cert.primal_y - H.entries).cwiseAbs().maxCoeff();
    if (resid > 1e-9) {
      std::printf("trial=%d resid=%.3e value=%.6f rank=%lld rn*cn=%.6f\n", trial, resid,
                  cert.value, (long long)cert.primal_x.cols(),
                  cert.row_norm_max * cert.col_norm_max);
      // locate worst entry
      Eigen::MatrixXcd E = cert.primal_x * cert.primal_y - H.entries;
      Eigen::Index bi, bj;
      E.cwiseAbs().maxCoeff(&bi, &bj);
      std::printf("  worst at (%lld,%lld): A=%.6f XY=%.6f\n", (long long)bi, (long long)bj,
                  std::abs(H.entries(bi, bj)),
                  std::abs((cert.primal_x * cert.primal_y)(bi, bj)));
    }
  }
  return 0;
}
