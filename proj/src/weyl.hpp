#pragma once

#include "fock.hpp"

#include <string>
#include <vector>

namespace srur::weyl {

/// Label (j, m) of a Weyl monomial T_jm, the symmetrized product of
/// x^{j+m} p^{j-m}.  Half-integers are stored as twice their value.
struct MonomialIndex {
  int two_j = 0;
  int two_m = 0;

  bool is_identity() const { return two_j == 0; }
  bool valid() const {
    return two_j >= 0 && std::abs(two_m) <= two_j &&
           (two_j - two_m) % 2 == 0;
  }
  int x_power() const { return (two_j + two_m) / 2; }
  int p_power() const { return (two_j - two_m) / 2; }
  friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

/// Two-mode label T^A_{jm} T^B_{j'm'}; either side may be the identity.
struct TwoModeIndex {
  MonomialIndex a;
  MonomialIndex b;
  friend bool operator==(const TwoModeIndex&, const TwoModeIndex&) = default;
};

std::string half_integer_string(int two_value);
std::string to_string(const MonomialIndex& idx);
std::string to_string(const TwoModeIndex& idx);

/// T_jm at the given cutoff, built from McCoy's form
/// Weyl(x^r p^s) = 2^-s sum_k C(s,k) p^k x^r p^{s-k}.  Always hermitian.
FockOperator monomial(const MonomialIndex& idx, int cutoff);
FockOperator monomial(const TwoModeIndex& idx, int cutoff_a, int cutoff_b);

/// SU(2) Clebsch-Gordan <j1 m1, j2 m2 | j m> in the Condon-Shortley
/// convention.  Arguments are twice the half-integer values; out-of-range
/// combinations return 0.  Integer-exact rational arithmetic is used for
/// j1+j2+j <= 8, a log-gamma fallback beyond.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_j, int two_m);

struct ProductTerm {
  MonomialIndex idx;
  Complex coeff;
};

/// Expansion of T_a T_b in the T basis via the CG product law.
std::vector<ProductTerm> monomial_product(const MonomialIndex& a,
                                          const MonomialIndex& b);

/// (T_{1/2,1/2}, T_{1/2,-1/2}, T_{1,1}, T_{1,0}, T_{1,-1}, ..., T_{J,-J});
/// length J(2J+3).
std::vector<MonomialIndex> single_mode_basis(double level_j);

/// All cross terms with j_A + j_B <= J in the paper ordering:
/// u before v iff the first non-zero entry of
/// (j'_A+j'_B - j_A-j_B, j_A - j'_A, m_A - m'_A, m_B - m'_B) is positive.
/// Length (1/6) J (2J+5) (2J^2+5J+5).
std::vector<TwoModeIndex> two_mode_basis(double level_j);

/// Validates J in {1/2, 1, 3/2, ...} and returns 2J.
int two_j_from_level(double level_j);

}  // namespace srur::weyl
