#include "criteria.hpp"
#include "moments.hpp"
#include "states.hpp"
#include "symplectic.hpp"
#include "weyl.hpp"

#include <cstdio>
#include <random>

using namespace srur;

int main() {
  // Acceptance-1 worst corners + detection at the Fig-1 grid edge.
  for (auto [alpha, p] : {std::pair{1.5, 0.2}, {0.3, 0.2}, {2.0, 0.05},
                          {0.05, 0.05}, {2.0, 1.0}}) {
    const int cutoff = states::cat_auto_cutoff(alpha, 1.0);
    auto cat = states::dephased_cat({alpha, p}, cutoff);
    auto rep = criteria::marginal_srur_report(cat, 0.0, 0.0,
                                              criteria::Channel::xminus_pplus);
    const double nfac = 1.0 / (2.0 - 2.0 * p * std::exp(-4.0 * alpha * alpha));
    const double d_expect = 2.0 * alpha * alpha * (2.0 * nfac - 1.0);
    const double det1_expect =
        -8.0 * nfac * alpha * alpha * d_expect * d_expect;
    std::printf(
        "alpha=%.2f p=%.2f cut=%d | det12 rel=%.2e det1 rel=%.2e witness=%.3e "
        "det=%d\n",
        alpha, p, cutoff, std::abs(rep.det_half / d_expect - 1.0),
        std::abs(rep.det_complement / det1_expect - 1.0), rep.verdict.witness,
        int(rep.verdict.detected));
  }

  // Entropic slacks: vacuum saturation, small-alpha non-detection, (2,1).
  {
    auto vac = states::coherent_product(0.0, 0.0, 10);
    auto [s1, s2] = criteria::entropic_slacks(vac, 0.0, 0.0);
    std::printf("entropic vacuum slacks: %.3e %.3e\n", s1, s2);
    auto cat_small = states::dephased_cat({0.5, 0.5},
                                          states::cat_auto_cutoff(0.5, 1.0));
    auto [t1, t2] = criteria::entropic_slacks(cat_small, 0.0, 0.0);
    std::printf("entropic cat(0.5,0.5): %.4f %.4f\n", t1, t2);
    auto cat_big = states::dephased_cat({2.0, 1.0},
                                        states::cat_auto_cutoff(2.0, 1.0));
    auto [u1, u2] = criteria::entropic_slacks(cat_big, 0.0, 0.0);
    std::printf("entropic cat(2,1): %.4f %.4f\n", u1, u2);
  }

  // Simon/Duan on TMS and cat; soundness on coherent product.
  {
    auto tms = states::two_mode_squeezed(0.5, 20);
    std::printf("TMS simon witness=%.4f duan witness=%.4f\n",
                criteria::simon_criterion(tms).witness,
                criteria::duan_criterion(tms).witness);
    auto cat = states::dephased_cat({1.0, 1.0}, 20);
    std::printf("cat simon witness=%.4e duan witness=%.4e\n",
                criteria::simon_criterion(cat).witness,
                criteria::duan_criterion(cat).witness);
    auto coh = states::coherent_product(0.7, -0.3, 14);
    std::printf("coh simon witness=%.4e duan witness=%.4e\n",
                criteria::simon_criterion(coh).witness,
                criteria::duan_criterion(coh).witness);
  }

  // BNS + PNES submatrix detection.
  {
    const auto basis = weyl::two_mode_basis(1.0);
    for (size_t i = 0; i < basis.size(); ++i)
      std::printf("%zu:%s ", i, weyl::to_string(basis[i]).c_str());
    std::printf("\n");
    auto bns = states::beam_split_number(1, 0, states::bns_auto_cutoff(1, 0));
    auto v = criteria::full_srur(bns, 1.0, {4, 7, 8, 10});
    std::printf("BNS(1,0) submatrix witness=%.4f det=%.4f detected=%d\n",
                v.witness, v.determinant, int(v.detected));
    auto pnes = states::pnes({1.0 / std::sqrt(3), 1.0 / std::sqrt(3),
                              1.0 / std::sqrt(3)},
                             states::pnes_auto_cutoff());
    auto w = criteria::full_srur(pnes, 1.0, {4, 6, 8, 11, 13});
    std::printf("PNES submatrix witness=%.4f det=%.4f detected=%d\n",
                w.witness, w.determinant, int(w.detected));
    auto full = criteria::full_srur(bns, 1.0);
    std::printf("BNS(1,0) full witness=%.4f detected=%d dim=%d\n",
                full.witness, int(full.detected), full.evidence.dim());
  }

  // Symplectic covariance, single mode.
  {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::uniform_real_distribution<double> sq(-0.5, 0.5);
    const int d_small = 6, d = 40;
    // random pure state on d_small support embedded at cutoff d
    Vector psi = Vector::Zero(d);
    std::normal_distribution<double> g;
    for (int i = 0; i < d_small; ++i) psi(i) = Complex(g(rng), g(rng));
    psi /= psi.norm();
    FockOperator rho{psi * psi.adjoint(), {d}};

    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      auto s = symplectic::compose(
          symplectic::rotation(ang(rng)),
          symplectic::compose(symplectic::squeeze(sq(rng)),
                              symplectic::rotation(ang(rng))));
      auto rho_t = symplectic::apply_symplectic(rho, s);
      for (double levelj : {0.5, 1.0}) {
        auto basis = weyl::single_mode_basis(levelj);
        auto m0 = moments::covariance_matrix(rho, basis);
        auto m1 = moments::covariance_matrix(rho_t, basis);
        RealMatrix k = symplectic::block_rep(levelj, s);
        Matrix pred = k.cast<Complex>() * m0.m * k.transpose().cast<Complex>();
        double rel = (m1.m - pred).cwiseAbs().maxCoeff() /
                     pred.cwiseAbs().maxCoeff();
        worst = std::max(worst, rel);
      }
    }
    std::printf("single-mode covariance worst rel err: %.3e\n", worst);
  }
  return 0;
}
