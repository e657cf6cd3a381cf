#include "criteria.hpp"
#include "moments.hpp"
#include "states.hpp"
#include "symplectic.hpp"
#include "weyl.hpp"

#include <cstdio>

using namespace srur;

int main() {
  // 1. vacuum M_1/2
  {
    FockOperator vac{Matrix::Zero(12, 12), {12}};
    vac.data(0, 0) = 1.0;
    auto mm = moments::covariance_matrix(vac, weyl::single_mode_basis(0.5));
    std::printf("vacuum M12: (%.6f,%.6f) (%.6f,%.6f)\n", mm.m(0, 0).real(),
                mm.m(0, 0).imag(), mm.m(0, 1).real(), mm.m(0, 1).imag());
    std::printf("vacuum min eig: %.3e\n", moments::min_eigenvalue(mm));
  }
  // 2. cat closed forms at alpha=1, p=1
  {
    const double alpha = 1.0, p = 1.0;
    const int cutoff = states::cat_auto_cutoff(alpha, 1.0);
    std::printf("cat cutoff: %d\n", cutoff);
    auto cat = states::dephased_cat({alpha, p}, cutoff);
    auto rep = criteria::marginal_srur_report(cat, 0.0, 0.0,
                                              criteria::Channel::xminus_pplus);
    const double nfac = 1.0 / (2.0 - 2.0 * p * std::exp(-4.0 * alpha * alpha));
    const double d_expect = 2.0 * alpha * alpha * (2.0 * nfac - 1.0);
    std::printf("det M12: got %.9f expect %.9f (rel %.2e)\n", rep.det_half,
                d_expect, std::abs(rep.det_half / d_expect - 1.0));
    const double det1_expect =
        -8.0 * nfac * alpha * alpha * d_expect * d_expect;
    std::printf("det M1|12: got %.9e expect %.9e (rel %.2e)\n",
                rep.det_complement, det1_expect,
                std::abs(rep.det_complement / det1_expect - 1.0));
    std::printf("witness: %.6e detected=%d level=%s\n",
                rep.verdict.witness, int(rep.verdict.detected),
                rep.verdict.level.c_str());
    // M11 display check
    const double d = rep.det_half;
    std::printf("M11 row0: (%.6f %+.6fi) (%.6f %+.6fi) (%.6f %+.6fi)\n",
                rep.m_one.m(2, 2).real(), rep.m_one.m(2, 2).imag(),
                rep.m_one.m(2, 3).real(), rep.m_one.m(2, 3).imag(),
                rep.m_one.m(2, 4).real(), rep.m_one.m(2, 4).imag());
    std::printf("expect:   (0.5 +0i) (0 +0.5i) (-0.5 +0i)\n");
    std::printf("M11(1,1): %.6f expect %.6f\n", rep.m_one.m(3, 3).real(),
                0.5 * (1.0 + 2.0 * d));
    std::printf("M11(1,2): %.6f%+.6fi expect 0%+.6fi\n",
                rep.m_one.m(3, 4).real(), rep.m_one.m(3, 4).imag(),
                0.5 * (1.0 + 4.0 * d));
    const double nalpha2 = nfac * alpha * alpha;
    std::printf("M11(2,2): %.6f expect %.6f\n", rep.m_one.m(4, 4).real(),
                0.5 * (1.0 + 8.0 * d * (1.0 - 4.0 * nalpha2)));
    std::printf("M_1,half block max: %.3e (expect 0)\n",
                rep.m_one.m.block(2, 0, 3, 2).cwiseAbs().maxCoeff());
  }
  // 3. HOM
  {
    auto bns = states::beam_split_number(1, 1, 8);
    std::printf("HOM |2,0>: %.6f |0,2>: %.6f |1,1>: %.3e\n",
                (*bns.pure)(2 * 8 + 0).real(), (*bns.pure)(0 * 8 + 2).real(),
                std::abs((*bns.pure)(1 * 8 + 1)));
  }
  // 4. product law display: T11 * T1-1
  {
    auto terms = weyl::monomial_product({2, 2}, {2, -2});
    for (const auto& t : terms)
      std::printf("T[%d/2,%d/2]: (%.4f, %.4f)\n", t.idx.two_j, t.idx.two_m,
                  t.coeff.real(), t.coeff.imag());
  }
  // 5. TMS mean photon number
  {
    auto tms = states::two_mode_squeezed(0.5, 20);
    auto n1 = tensor(number_op(20), identity_op(20));
    std::printf("TMS <n1>: %.6f expect %.6f\n",
                expectation(tms, n1).real(), std::sinh(0.5) * std::sinh(0.5));
  }
  return 0;
}
