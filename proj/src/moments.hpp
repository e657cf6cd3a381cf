#pragma once

#include "fock.hpp"
#include "weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srur::moments {

/// Covariance matrix M = V + (i/2) Omega of centered observables.
struct MomentMatrix {
  Matrix m;                        // hermitian
  std::vector<std::string> basis;  // row labels
  RealMatrix v;                    // real symmetric part
  RealMatrix omega;                // real antisymmetric part

  int dim() const { return static_cast<int>(m.rows()); }
};

/// Validates hermiticity (1e-10 relative) and splits into v and omega.
MomentMatrix make_moment_matrix(Matrix m, std::vector<std::string> basis);

/// M_ab = <T_a T_b> - <T_a><T_b> over the given single-mode monomial basis.
/// The state must be hermitian with unit trace; positivity is not required,
/// so partial-transpose images are accepted.
MomentMatrix covariance_matrix(const FockOperator& state,
                               const std::vector<weyl::MonomialIndex>& basis);

/// Two-mode version over product observables T^A (x) T^B.
MomentMatrix covariance_matrix(const FockOperator& state,
                               const std::vector<weyl::TwoModeIndex>& basis);

/// M_J(rho^Gamma) for a pure rho = |psi><psi|, computed through the product
/// structure of the observables without materializing rho^Gamma.  Agrees with
/// covariance_matrix(partial_transpose(rho), basis).
MomentMatrix pt_covariance_matrix_pure(
    const Vector& psi, int dim_a, int dim_b,
    const std::vector<weyl::TwoModeIndex>& basis);

/// M22 - M21 M11^+ M12 for the leading block of the given size; M11^+ is the
/// Moore-Penrose inverse with singular values below 1e-10 sigma_max zeroed.
Matrix schur_complement(const MomentMatrix& mm, int split);

double min_eigenvalue(const Matrix& hermitian);
double min_eigenvalue(const MomentMatrix& mm);

/// Largest |eigenvalue|; the scale entering relative PSD tolerances.
double spectral_scale(const Matrix& hermitian);

/// PSD iff min eigenvalue >= -tol (1 + sigma_max).
bool is_psd(const Matrix& hermitian, double tol = 1e-9);
bool is_psd(const MomentMatrix& mm, double tol = 1e-9);

/// Entanglement-detection threshold: a witness counts as negative only below
/// -kDetectionTol (1 + scale), well above eigensolver noise.
inline constexpr double kDetectionTol = 1e-8;
bool negative_beyond_tolerance(double value, double scale,
                               double tol = kDetectionTol);

/// Determinant of the principal submatrix on the given rows (0-based).
double principal_minor(const MomentMatrix& mm, const std::vector<int>& rows);

/// First principal minor below -tol (1+sigma_max)^size, scanning subset sizes
/// 1..max_size in lexicographic order; nullopt when none is negative.
std::optional<std::vector<int>> sylvester_scan(const MomentMatrix& mm,
                                               int max_size,
                                               double tol = 1e-9);

/// Weyl moment <T_jm> via the Wigner quadrature of Eq-style
/// integral W(x,p) x^{j+m} p^{j-m} on a square grid (step <= 0.1, span
/// covering +-(sqrt(2 nbar) + 6)).  Cross-validation channel only.
double moment_via_wigner(const FockOperator& state,
                         const weyl::MonomialIndex& idx,
                         const std::vector<double>& grid);

/// n uniformly spaced samples over [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int n);

/// Composite Simpson weights on a uniform grid (odd point count required).
double simpson(const RealVector& values, double step);

}  // namespace srur::moments
