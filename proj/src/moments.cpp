#include "moments.hpp"

#include <cmath>
#include <stdexcept>

namespace srur::moments {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_state(const FockOperator& state) {
  if (!state.is_hermitian(1e-10))
    throw std::invalid_argument("covariance_matrix: state not hermitian");
  if (std::abs(state.data.trace() - 1.0) > 1e-8)
    throw std::invalid_argument("covariance_matrix: state trace must be 1");
}

std::vector<std::string> label_strings(
    const std::vector<weyl::MonomialIndex>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(weyl::to_string(b));
  return out;
}

std::vector<std::string> label_strings(
    const std::vector<weyl::TwoModeIndex>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(weyl::to_string(b));
  return out;
}

Matrix center(Matrix raw, const Vector& means) {
  for (Eigen::Index i = 0; i < raw.rows(); ++i)
    for (Eigen::Index j = 0; j < raw.cols(); ++j)
      raw(i, j) -= means(i) * means(j);
  // Enforce exact hermiticity of the Gram structure against roundoff.
  return 0.5 * (raw + raw.adjoint()).eval();
}

}  // namespace

MomentMatrix make_moment_matrix(Matrix m, std::vector<std::string> basis) {
  require(m.rows() == m.cols(), "moment matrix must be square");
  require(basis.size() == size_t(m.rows()),
          "moment matrix basis length mismatch");
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  if (scale > 0.0 && (m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("moment matrix not hermitian");
  m = 0.5 * (m + m.adjoint()).eval();
  MomentMatrix out;
  out.v = m.real();
  out.omega = 2.0 * m.imag();
  out.m = std::move(m);
  out.basis = std::move(basis);
  return out;
}

MomentMatrix covariance_matrix(const FockOperator& state,
                               const std::vector<weyl::MonomialIndex>& basis) {
  require(state.n_modes() == 1, "single-mode basis needs a single-mode state");
  check_state(state);
  const int d = state.dim();
  const int n = static_cast<int>(basis.size());

  std::vector<Matrix> ops(n);
  for (int i = 0; i < n; ++i) ops[i] = weyl::monomial(basis[i], d).data;

  Vector means(n);
  for (int i = 0; i < n; ++i)
    means(i) = (state.data.cwiseProduct(ops[i].transpose())).sum();

  Matrix raw(n, n);
  for (int i = 0; i < n; ++i) {
    const Matrix left = state.data * ops[i];
    for (int j = i; j < n; ++j) {
      raw(i, j) = (left.cwiseProduct(ops[j].transpose())).sum();
      if (j != i) raw(j, i) = std::conj(raw(i, j));
    }
  }
  return make_moment_matrix(center(std::move(raw), means),
                            label_strings(basis));
}

namespace {

struct KronFactors {
  Matrix a;
  Matrix b;
};

std::vector<KronFactors> factor_ops(const std::vector<weyl::TwoModeIndex>& basis,
                                    int dim_a, int dim_b) {
  std::vector<KronFactors> ops;
  ops.reserve(basis.size());
  for (const auto& idx : basis)
    ops.push_back({weyl::monomial(idx.a, dim_a).data,
                   weyl::monomial(idx.b, dim_b).data});
  return ops;
}

}  // namespace

MomentMatrix covariance_matrix(const FockOperator& state,
                               const std::vector<weyl::TwoModeIndex>& basis) {
  require(state.n_modes() == 2, "two-mode basis needs a two-mode state");
  check_state(state);
  const int da = state.mode_dims[0], db = state.mode_dims[1];
  const int n = static_cast<int>(basis.size());
  const auto ops = factor_ops(basis, da, db);

  Vector means(n);
  for (int i = 0; i < n; ++i)
    means(i) = expectation_kron(state, ops[i].a, ops[i].b);

  Matrix raw(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      // T_i T_j = (A_i A_j) (x) (B_i B_j)
      raw(i, j) = expectation_kron(state, ops[i].a * ops[j].a,
                                   ops[i].b * ops[j].b);
      if (j != i) raw(j, i) = std::conj(raw(i, j));
    }
  }
  return make_moment_matrix(center(std::move(raw), means),
                            label_strings(basis));
}

MomentMatrix pt_covariance_matrix_pure(
    const Vector& psi, int dim_a, int dim_b,
    const std::vector<weyl::TwoModeIndex>& basis) {
  require(psi.size() == Eigen::Index(dim_a) * dim_b,
          "pt_covariance_matrix_pure: vector length mismatch");
  const int n = static_cast<int>(basis.size());
  const auto ops = factor_ops(basis, dim_a, dim_b);

  // Tr(rho^Gamma (MA (x) MB)) = <psi| MA (x) MB^T |psi>
  Vector means(n);
  for (int i = 0; i < n; ++i)
    means(i) = expectation_kron_pure(psi, dim_a, dim_b, ops[i].a,
                                     ops[i].b.transpose());

  Matrix raw(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      raw(i, j) = expectation_kron_pure(psi, dim_a, dim_b,
                                        ops[i].a * ops[j].a,
                                        (ops[i].b * ops[j].b).transpose());
      if (j != i) raw(j, i) = std::conj(raw(i, j));
    }
  }
  return make_moment_matrix(center(std::move(raw), means),
                            label_strings(basis));
}

Matrix schur_complement(const MomentMatrix& mm, int split) {
  const int n = mm.dim();
  require(split > 0 && split < n, "schur_complement: invalid split");
  const Matrix m11 = mm.m.topLeftCorner(split, split);
  const Matrix m12 = mm.m.topRightCorner(split, n - split);
  const Matrix m21 = mm.m.bottomLeftCorner(n - split, split);
  const Matrix m22 = mm.m.bottomRightCorner(n - split, n - split);

  Eigen::SelfAdjointEigenSolver<Matrix> es(m11);
  const double sigma_max = es.eigenvalues().cwiseAbs().maxCoeff();
  const double cut = 1e-10 * sigma_max;
  Vector inv_diag(split);
  for (int i = 0; i < split; ++i) {
    const double lam = es.eigenvalues()(i);
    inv_diag(i) = std::abs(lam) <= cut ? 0.0 : 1.0 / lam;
  }
  const Matrix pinv = es.eigenvectors() * inv_diag.asDiagonal() *
                      es.eigenvectors().adjoint();
  Matrix out = m22 - m21 * pinv * m12;
  return 0.5 * (out + out.adjoint()).eval();
}

double min_eigenvalue(const Matrix& hermitian) {
  const double scale =
      hermitian.size() ? hermitian.cwiseAbs().maxCoeff() : 0.0;
  if (scale > 0.0 &&
      (hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw std::invalid_argument("min_eigenvalue: matrix not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      (0.5 * (hermitian + hermitian.adjoint())).eval(),
      Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double min_eigenvalue(const MomentMatrix& mm) { return min_eigenvalue(mm.m); }

double spectral_scale(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      (0.5 * (hermitian + hermitian.adjoint())).eval(),
      Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

bool is_psd(const Matrix& hermitian, double tol) {
  return min_eigenvalue(hermitian) >= -tol * (1.0 + spectral_scale(hermitian));
}

bool is_psd(const MomentMatrix& mm, double tol) { return is_psd(mm.m, tol); }

bool negative_beyond_tolerance(double value, double scale, double tol) {
  return value < -tol * (1.0 + scale);
}

double principal_minor(const MomentMatrix& mm, const std::vector<int>& rows) {
  const int k = static_cast<int>(rows.size());
  require(k > 0, "principal_minor: empty row set");
  for (int r : rows)
    require(r >= 0 && r < mm.dim(), "principal_minor: row out of range");
  Matrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = mm.m(rows[i], rows[j]);
  const Complex det = sub.determinant();
  if (std::abs(det.imag()) > 1e-10 * (1.0 + std::abs(det.real())))
    throw std::runtime_error("principal_minor: imaginary residue in determinant");
  return det.real();
}

namespace {

bool next_subset(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<std::vector<int>> sylvester_scan(const MomentMatrix& mm,
                                               int max_size, double tol) {
  require(max_size >= 1, "sylvester_scan: max_size must be >= 1");
  const int n = mm.dim();
  const double scale = 1.0 + spectral_scale(mm.m);
  for (int k = 1; k <= std::min(max_size, n); ++k) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    do {
      if (principal_minor(mm, subset) < -tol * std::pow(scale, k))
        return subset;
    } while (next_subset(subset, n));
  }
  return std::nullopt;
}

double moment_via_wigner(const FockOperator& state,
                         const weyl::MonomialIndex& idx,
                         const std::vector<double>& grid) {
  require(state.n_modes() == 1, "moment_via_wigner: single-mode state required");
  require(grid.size() >= 3 && grid.size() % 2 == 1,
          "moment_via_wigner: odd-length uniform grid required");
  const double step = grid[1] - grid[0];
  for (size_t i = 1; i < grid.size(); ++i)
    require(std::abs(grid[i] - grid[i - 1] - step) < 1e-9 * (1.0 + step),
            "moment_via_wigner: grid must be uniform");
  if (step > 0.1)
    throw std::invalid_argument("moment_via_wigner: grid too coarse (step > 0.1)");
  const double nbar = std::max(
      0.0, expectation(state, number_op(state.dim())).real());
  const double bound = std::sqrt(2.0 * nbar) + 6.0;
  require(grid.front() <= -bound && grid.back() >= bound,
          "moment_via_wigner: grid does not cover +-(sqrt(2 nbar)+6)");

  const RealMatrix w = wigner_function(state, grid, grid);
  const int nx = static_cast<int>(grid.size());
  const int r = idx.x_power(), s = idx.p_power();
  RealVector row_integrals(nx);
  for (int i = 0; i < nx; ++i) {
    RealVector f(nx);
    for (int j = 0; j < nx; ++j)
      f(j) = w(i, j) * std::pow(grid[j], s);
    row_integrals(i) = simpson(f, step) * std::pow(grid[i], r);
  }
  return simpson(row_integrals, step);
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  require(n >= 2 && hi > lo, "uniform_grid: invalid parameters");
  std::vector<double> g(n);
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo + step * i;
  g.back() = hi;
  return g;
}

double simpson(const RealVector& values, double step) {
  const int n = static_cast<int>(values.size());
  require(n >= 3 && n % 2 == 1, "simpson: odd point count required");
  double acc = values(0) + values(n - 1);
  for (int i = 1; i < n - 1; ++i) acc += values(i) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * step / 3.0;
}

}  // namespace srur::moments
