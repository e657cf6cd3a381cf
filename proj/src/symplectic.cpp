#include "symplectic.hpp"

#include "weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace srur::symplectic {

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

SymplecticElement make_symplectic(const Eigen::Matrix2d& s) {
  if (std::abs(s.determinant() - 1.0) > 1e-12)
    throw std::invalid_argument("symplectic element must have det 1");
  return {s};
}

SymplecticElement rotation(double theta) {
  Eigen::Matrix2d s;
  s << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return {s};
}

SymplecticElement squeeze(double r) {
  Eigen::Matrix2d s;
  s << std::exp(r), 0.0, 0.0, std::exp(-r);
  return {s};
}

SymplecticElement shear(double t) {
  Eigen::Matrix2d s;
  s << 1.0, t, 0.0, 1.0;
  return {s};
}

SymplecticElement compose(const SymplecticElement& a,
                          const SymplecticElement& b) {
  return {a.s * b.s};
}

SymplecticElement inverse(const SymplecticElement& a) {
  Eigen::Matrix2d inv;
  // det = 1, so the adjugate is the inverse.
  inv << a.s(1, 1), -a.s(0, 1), -a.s(1, 0), a.s(0, 0);
  return {inv};
}

RealMatrix rep_K(double j, const SymplecticElement& s) {
  const int two_j = weyl::two_j_from_level(j);
  const int dim = two_j + 1;
  const double a = s.s(0, 0), b = s.s(0, 1), c = s.s(1, 0), d = s.s(1, 1);
  RealMatrix k = RealMatrix::Zero(dim, dim);
  // Row index counts down from m = j; row m carries (ax+bp)^{j+m} (cx+dp)^{j-m}
  // expanded over the monomials x^{j+m'} p^{j-m'}.
  for (int row = 0; row < dim; ++row) {
    const int r = two_j - row;  // x-power j+m
    const int q = row;          // p-power j-m
    for (int i = 0; i <= r; ++i) {
      for (int l = 0; l <= q; ++l) {
        const int x_pow = i + l;
        const int col = two_j - x_pow;  // column with x-power i+l
        k(row, col) += binomial(r, i) * std::pow(a, i) * std::pow(b, r - i) *
                       binomial(q, l) * std::pow(c, l) * std::pow(d, q - l);
      }
    }
  }
  return k;
}

RealMatrix block_rep(double level_j, const SymplecticElement& s) {
  const int two_j_max = weyl::two_j_from_level(level_j);
  int n = 0;
  for (int tj = 1; tj <= two_j_max; ++tj) n += tj + 1;
  RealMatrix k = RealMatrix::Zero(n, n);
  int off = 0;
  for (int tj = 1; tj <= two_j_max; ++tj) {
    const int dim = tj + 1;
    k.block(off, off, dim, dim) = rep_K(0.5 * tj, s);
    off += dim;
  }
  return k;
}

RealMatrix two_mode_local_rep(double level_j, const SymplecticElement& sa,
                              const SymplecticElement& sb) {
  const int two_j_max = weyl::two_j_from_level(level_j);
  int n = 0;
  for (int total = 1; total <= two_j_max; ++total)
    for (int tja = total; tja >= 0; --tja) n += (tja + 1) * (total - tja + 1);
  RealMatrix k = RealMatrix::Zero(n, n);
  int off = 0;
  for (int total = 1; total <= two_j_max; ++total) {
    for (int tja = total; tja >= 0; --tja) {
      const int tjb = total - tja;
      const RealMatrix ka =
          tja == 0 ? RealMatrix::Identity(1, 1) : rep_K(0.5 * tja, sa);
      const RealMatrix kb =
          tjb == 0 ? RealMatrix::Identity(1, 1) : rep_K(0.5 * tjb, sb);
      const int da = tja + 1, db = tjb + 1;
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
          k.block(off + i * db, off + j * db, db, db) = ka(i, j) * kb;
      off += da * db;
    }
  }
  return k;
}

EulerDecomposition euler_decompose(const SymplecticElement& s) {
  const Eigen::Matrix2d a = s.s * s.s.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(a);
  Eigen::Matrix2d q = es.eigenvectors();
  Eigen::Vector2d lam = es.eigenvalues();
  // Order so the diagonal becomes (e^r, e^-r) with the larger value first.
  if (lam(0) < lam(1)) {
    std::swap(lam(0), lam(1));
    q.col(0).swap(q.col(1));
  }
  if (q.determinant() < 0.0) q.col(1) *= -1.0;

  EulerDecomposition out;
  out.r = 0.5 * std::log(lam(0));
  out.phi = std::atan2(q(0, 1), q(0, 0));
  const Eigen::Matrix2d d_inv =
      Eigen::Vector2d(std::exp(-out.r), std::exp(out.r)).asDiagonal();
  const Eigen::Matrix2d rpsi = d_inv * q.transpose() * s.s;
  out.psi = std::atan2(rpsi(0, 1), rpsi(0, 0));

  const Eigen::Matrix2d check =
      rotation(out.phi).s * squeeze(out.r).s * rotation(out.psi).s;
  if ((check - s.s).cwiseAbs().maxCoeff() > 1e-9)
    throw std::runtime_error("euler_decompose: reconstruction failed");
  return out;
}

Matrix single_mode_unitary(const SymplecticElement& s, int cutoff) {
  const EulerDecomposition e = euler_decompose(s);
  FockOperator a = annihilation_op(cutoff);
  const Matrix ad = a.data.adjoint();
  const Matrix uz = exp_antihermitian(0.5 * e.r * (ad * ad - a.data * a.data));
  Vector ph_phi(cutoff), ph_psi(cutoff);
  for (int n = 0; n < cutoff; ++n) {
    ph_phi(n) = std::exp(Complex(0.0, -e.phi * n));
    ph_psi(n) = std::exp(Complex(0.0, -e.psi * n));
  }
  return ph_phi.asDiagonal() * uz * Matrix(ph_psi.asDiagonal());
}

FockOperator apply_symplectic(const FockOperator& single_mode,
                              const SymplecticElement& s) {
  if (single_mode.n_modes() != 1)
    throw std::invalid_argument("apply_symplectic: single-mode required");
  const Matrix u = single_mode_unitary(s, single_mode.dim());
  FockOperator out = single_mode;
  out.data = u * single_mode.data * u.adjoint();
  return out;
}

TwoModeState apply_local_symplectic(const TwoModeState& state,
                                    const SymplecticElement& sa,
                                    const SymplecticElement& sb) {
  const int da = state.dim_a(), db = state.dim_b();
  TwoModeState out = state;
  out.op.data =
      conjugate_mode(out.op.data, single_mode_unitary(sa, da), 0, da, db);
  out.op.data =
      conjugate_mode(out.op.data, single_mode_unitary(sb, db), 1, da, db);
  out.positive = state.positive;
  return out;
}

}  // namespace srur::symplectic
