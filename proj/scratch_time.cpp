#include "criteria.hpp"
#include "states.hpp"

#include <chrono>
#include <cstdio>

using namespace srur;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    const int cutoff = states::cat_auto_cutoff(alpha, 1.0);
    auto t0 = Clock::now();
    auto cat = states::dephased_cat({alpha, 1.0}, cutoff);
    const double t_build = ms_since(t0);

    t0 = Clock::now();
    auto rep = criteria::marginal_srur_report(cat, 0.0, 0.0,
                                              criteria::Channel::xminus_pplus);
    const double t_marg = ms_since(t0);

    t0 = Clock::now();
    auto slacks = criteria::entropic_slacks(cat, 0.0, 0.0);
    const double t_ent = ms_since(t0);

    t0 = Clock::now();
    const double pt_eig = criteria::pt_min_eigenvalue(cat);
    const double t_pt = ms_since(t0);

    std::printf(
        "alpha=%.1f cut=%d build=%.0fms marginal=%.0fms entropy=%.0fms "
        "pt_eig=%.0fms (%.2e, slack %.3f)\n",
        alpha, cutoff, t_build, t_marg, t_ent, t_pt, pt_eig, slacks.first);
  }
  return 0;
}
