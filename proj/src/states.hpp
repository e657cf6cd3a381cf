#pragma once

#include "fock.hpp"

namespace srur::states {

/// Dephased-cat parameters: real amplitude alpha, coherence p in [0, 1].
struct CatParams {
  double alpha = 1.0;
  double p = 1.0;
};

/// Truncated photon-number-entangled state c0|0,0> + c1|1,1> + c2|2,2>.
struct PnesParams {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Truncated coherent amplitudes e^{-a^2/2} a^n / sqrt(n!) (not renormalized).
Vector coherent_vector(double alpha, int cutoff);

/// rho_cat = N [ |a,a><a,a| + |-a,-a><-a,-a|
///              - p (|a,a><-a,-a| + h.c.) ],  N = 1/(2 - 2 p e^{-4 a^2}).
/// The truncation deficit of the target trace must stay below 1e-8.
TwoModeState dephased_cat(const CatParams& params, int cutoff);

/// B|n,m><n,m|B^dag with the 50/50 splitter; requires cutoff > n+m+1.
TwoModeState beam_split_number(int n, int m, int cutoff);

TwoModeState pnes(const PnesParams& params, int cutoff);

/// sqrt(1-t^2) sum_n t^n |n,n>, t = tanh(r).
TwoModeState two_mode_squeezed(double r, int cutoff);

TwoModeState coherent_product(double alpha1, double alpha2, int cutoff);

/// Cutoff suggestions feeding fock's rule with each family's mean photon
/// number (finitely supported states just need operator headroom).
int cat_auto_cutoff(double alpha, double level_j);
int bns_auto_cutoff(int n, int m);
int pnes_auto_cutoff();
int squeezed_auto_cutoff(double r, double level_j);
int coherent_auto_cutoff(double alpha1, double alpha2, double level_j);

}  // namespace srur::states
