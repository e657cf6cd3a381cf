#pragma once

#include "fock.hpp"

namespace srur::symplectic {

/// Element of Sp(2,R): real 2x2 matrix with S Omega S^T = Omega,
/// Omega = [[0,1],[-1,0]], i.e. det S = 1.
struct SymplecticElement {
  Eigen::Matrix2d s;
};

/// Validates det S = 1 within 1e-12.
SymplecticElement make_symplectic(const Eigen::Matrix2d& s);

SymplecticElement rotation(double theta);  // [[cos,sin],[-sin,cos]]
SymplecticElement squeeze(double r);       // diag(e^r, e^-r)
SymplecticElement shear(double t);         // [[1,t],[0,1]]
SymplecticElement compose(const SymplecticElement& a,
                          const SymplecticElement& b);
SymplecticElement inverse(const SymplecticElement& a);

/// (2j+1)-dim real representation K^(j)(S) carrying the classical monomials
/// (x^{j+m} p^{j-m}), m = j..-j, under (x,p) -> S(x,p).  K^(1/2)(S) = S.
RealMatrix rep_K(double j, const SymplecticElement& s);

/// K_J(S) = K^(1/2) + K^(1) + ... + K^(J) (direct sum, basis order).
RealMatrix block_rep(double level_j, const SymplecticElement& s);

/// Two-mode local version in two_mode_basis order:
/// K_A^(1/2) + K_B^(1/2) + K_A^(1) + [K_A^(1/2) x K_B^(1/2)] + K_B^(1) + ...
RealMatrix two_mode_local_rep(double level_j, const SymplecticElement& sa,
                              const SymplecticElement& sb);

/// S = R(phi) diag(e^r, e^-r) R(psi).
struct EulerDecomposition {
  double phi = 0.0;
  double r = 0.0;
  double psi = 0.0;
};
EulerDecomposition euler_decompose(const SymplecticElement& s);

/// Fock-space unitary realizing the conjugation action of S, as
/// rotation * squeeze * rotation from the Euler decomposition.
Matrix single_mode_unitary(const SymplecticElement& s, int cutoff);

/// rho -> U(S) rho U(S)^dag on a single-mode operator.
FockOperator apply_symplectic(const FockOperator& single_mode,
                              const SymplecticElement& s);

/// rho -> (U(S_A) x U(S_B)) rho (.)^dag on a two-mode state.
TwoModeState apply_local_symplectic(const TwoModeState& state,
                                    const SymplecticElement& sa,
                                    const SymplecticElement& sb);

}  // namespace srur::symplectic
