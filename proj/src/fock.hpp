#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace srur {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Dense operator on a truncated number basis, one or two modes.
/// Two-mode indices are flattened with mode A slow: row = iA * dimB + iB.
///
/// Quadrature convention (fixed project-wide): x = (a + a^dag)/sqrt(2),
/// p = (a - a^dag)/(i sqrt(2)), so [x, p] = i and the vacuum has
/// <x^2> = 1/2.  hbar = 1 throughout.
struct FockOperator {
  Matrix data;
  std::vector<int> mode_dims;

  int dim() const { return static_cast<int>(data.rows()); }
  int n_modes() const { return static_cast<int>(mode_dims.size()); }
  bool is_hermitian(double rel_tol = 1e-12) const;
};

enum class Positivity { yes, no, unknown };

/// Hermitian unit-trace two-mode operator.  `positive` is a tri-state:
/// partial-transpose images keep the same type with positive = unknown/no.
/// For pure states the builders keep the normalized state vector alongside
/// the density matrix; unitary maps carry it, partial transpose drops it.
struct TwoModeState {
  FockOperator op;
  Complex trace{1.0, 0.0};
  Positivity positive = Positivity::unknown;
  std::optional<Vector> pure;

  int dim_a() const { return op.mode_dims[0]; }
  int dim_b() const { return op.mode_dims[1]; }
};

FockOperator identity_op(int cutoff);
FockOperator annihilation_op(int cutoff);
FockOperator number_op(int cutoff);

/// (x, p) with [x, p] = i on every basis state except the truncation corner.
std::pair<FockOperator, FockOperator> quadrature_ops(int cutoff);

/// Kronecker product of two single-mode operators, mode A slow.
FockOperator tensor(const FockOperator& a, const FockOperator& b);

/// Validates hermiticity and unit trace (1e-9), then normalizes the trace
/// exactly.  positive flag is taken at face value from the caller.
TwoModeState make_two_mode_state(FockOperator op,
                                 Positivity positive = Positivity::unknown);

/// Transpose on the second mode's indices: out[(i,k),(j,l)] = in[(i,l),(j,k)].
/// Equals the Wigner-level p2 -> -p2 flip.  Involution; preserves trace and
/// hermiticity; positivity becomes unknown.
TwoModeState partial_transpose(const TwoModeState& s);
Matrix partial_transpose_raw(const Matrix& m, int dim_a, int dim_b);

/// Conjugation by B = exp[pi/4 (a^dag b - a b^dag)].  Heisenberg picture:
/// mode A reads out (x1+x2)/sqrt(2), mode B reads out (x2-x1)/sqrt(2).
/// Implemented per total-photon-number sector (B commutes with n1+n2).
TwoModeState beam_splitter_50(const TwoModeState& s);
FockOperator beam_splitter_50(const FockOperator& o);
Vector beam_splitter_apply(const Vector& psi, int cutoff);

/// Conjugation by exp(-i th1 n1) (x) exp(-i th2 n2); Heisenberg picture
/// x -> cos(th) x + sin(th) p per mode.
TwoModeState local_rotation(const TwoModeState& s, double theta1, double theta2);
FockOperator local_rotation(const FockOperator& o, double theta1, double theta2);
/// Single-mode version of the same rotation.
FockOperator rotate_mode(const FockOperator& single_mode, double theta);

/// Conjugation by exp[r (a^dag^2 - a^2)/2] per mode; Heisenberg picture
/// x -> e^r x, p -> e^-r p.  |r| > max_abs_r is rejected (truncation unsafe).
TwoModeState local_squeeze(const TwoModeState& s, double r1, double r2,
                           double max_abs_r = 2.0);
FockOperator local_squeeze(const FockOperator& o, double r1, double r2,
                           double max_abs_r = 2.0);
FockOperator squeeze_mode(const FockOperator& single_mode, double r,
                          double max_abs_r = 2.0);

/// Tr(s . obs).  Defined for any hermitian s, including non-positive
/// partial-transpose images.
Complex expectation(const FockOperator& s, const FockOperator& obs);
Complex expectation(const TwoModeState& s, const FockOperator& obs);

/// Tr(s . (ma (x) mb)) without forming the Kronecker product.
Complex expectation_kron(const FockOperator& s, const Matrix& ma,
                         const Matrix& mb);

/// <psi| ma (x) mb |psi> for a two-mode vector (mode A slow).
Complex expectation_kron_pure(const Vector& psi, int dim_a, int dim_b,
                              const Matrix& ma, const Matrix& mb);

/// Sum over the discarded mode's diagonal indices.  keep = 0 keeps mode A.
FockOperator partial_trace(const TwoModeState& s, int keep);
FockOperator partial_trace(const FockOperator& o, int keep);

/// P(q) = sum_{n,m} s[n,m] psi_n(q) psi_m(q) with unit-frequency harmonic
/// oscillator eigenfunctions.  Imaginary residue above 1e-10 rejects the
/// input; the result is clipped to real.
RealVector position_distribution(const FockOperator& s,
                                 const std::vector<double>& grid);

/// Wigner function on a product grid, normalized so that
/// integral W dx dp = 1.  W(i, j) = W(x_grid[i], p_grid[j]).
RealMatrix wigner_function(const FockOperator& s,
                           const std::vector<double>& x_grid,
                           const std::vector<double>& p_grid);

/// psi_n(q) table, row n in [0, n_max), one column per grid point.
RealMatrix hermite_functions(const std::vector<double>& grid, int n_max);

/// exp(G) for anti-hermitian G, via the hermitian eigendecomposition of -iG.
Matrix exp_antihermitian(const Matrix& g);

/// Apply a single-mode unitary to one mode of a two-mode matrix:
/// (U (x) 1) m (U (x) 1)^dag for mode = 0, (1 (x) U) m (1 (x) U)^dag for 1.
Matrix conjugate_mode(const Matrix& m, const Matrix& u, int mode, int dim_a,
                      int dim_b);

/// Cutoff rule: ceil(nbar + 6 sqrt(nbar+1)) + 2J + headroom, floor 4.
int auto_cutoff(double nbar, double level_j);

namespace detail {
// Total-photon-number block form of the 50/50 beam splitter at equal cutoffs.
struct BeamSplitterBlocks {
  int cutoff = 0;
  std::vector<std::vector<int>> sector;  // flattened indices per total N
  std::vector<Matrix> unitary;           // U_N on each sector
};
const BeamSplitterBlocks& beam_splitter_blocks(int cutoff);
Matrix bs_left_apply(const BeamSplitterBlocks& b, const Matrix& m);
}  // namespace detail

}  // namespace srur
