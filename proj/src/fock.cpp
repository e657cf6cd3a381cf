#include "fock.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace srur {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

bool FockOperator::is_hermitian(double rel_tol) const {
  const double scale = max_abs(data);
  if (scale == 0.0) return true;
  return max_abs(data - data.adjoint()) <= rel_tol * scale;
}

FockOperator identity_op(int cutoff) {
  require(cutoff >= 1, "identity_op: cutoff must be >= 1");
  return {Matrix::Identity(cutoff, cutoff), {cutoff}};
}

FockOperator annihilation_op(int cutoff) {
  require(cutoff >= 2, "annihilation_op: cutoff must be >= 2");
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
  return {std::move(a), {cutoff}};
}

FockOperator number_op(int cutoff) {
  require(cutoff >= 1, "number_op: cutoff must be >= 1");
  Matrix n = Matrix::Zero(cutoff, cutoff);
  for (int k = 0; k < cutoff; ++k) n(k, k) = double(k);
  return {std::move(n), {cutoff}};
}

std::pair<FockOperator, FockOperator> quadrature_ops(int cutoff) {
  FockOperator a = annihilation_op(cutoff);
  const Matrix ad = a.data.adjoint();
  Matrix x = (a.data + ad) / std::sqrt(2.0);
  Matrix p = (a.data - ad) / (Complex(0.0, 1.0) * std::sqrt(2.0));
  return {FockOperator{std::move(x), {cutoff}},
          FockOperator{std::move(p), {cutoff}}};
}

FockOperator tensor(const FockOperator& a, const FockOperator& b) {
  require(a.n_modes() == 1 && b.n_modes() == 1,
          "tensor: both operands must be single-mode");
  const int da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.data(i, j) * b.data;
  return {std::move(out), {da, db}};
}

TwoModeState make_two_mode_state(FockOperator op, Positivity positive) {
  require(op.n_modes() == 2, "state: two-mode operator required");
  require(op.data.rows() == op.mode_dims[0] * op.mode_dims[1],
          "state: matrix dimension does not match mode_dims");
  if (!op.is_hermitian(1e-12))
    throw std::invalid_argument("state: operator is not hermitian");
  const Complex tr = op.data.trace();
  if (std::abs(tr - 1.0) > 1e-9)
    throw std::invalid_argument("state: trace deviates from 1 beyond 1e-9");
  op.data /= tr;
  return TwoModeState{std::move(op), Complex(1.0, 0.0), positive};
}

Matrix partial_transpose_raw(const Matrix& m, int dim_a, int dim_b) {
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      out.block(i * dim_b, j * dim_b, dim_b, dim_b) =
          m.block(i * dim_b, j * dim_b, dim_b, dim_b).transpose();
  return out;
}

TwoModeState partial_transpose(const TwoModeState& s) {
  TwoModeState out = s;
  out.op.data = partial_transpose_raw(s.op.data, s.dim_a(), s.dim_b());
  out.positive = Positivity::unknown;
  out.pure.reset();
  return out;
}

namespace detail {

namespace {
std::mutex g_bs_mutex;
std::map<int, std::unique_ptr<BeamSplitterBlocks>> g_bs_cache;
}  // namespace

const BeamSplitterBlocks& beam_splitter_blocks(int cutoff) {
  std::lock_guard<std::mutex> lock(g_bs_mutex);
  auto it = g_bs_cache.find(cutoff);
  if (it != g_bs_cache.end()) return *it->second;

  auto blocks = std::make_unique<BeamSplitterBlocks>();
  blocks->cutoff = cutoff;
  const int d = cutoff;
  for (int total = 0; total <= 2 * (d - 1); ++total) {
    const int k_lo = std::max(0, total - d + 1);
    const int k_hi = std::min(total, d - 1);
    const int size = k_hi - k_lo + 1;
    std::vector<int> idx(size);
    for (int k = k_lo; k <= k_hi; ++k) idx[k - k_lo] = k * d + (total - k);

    // Generator (pi/4)(a^dag b - a b^dag) restricted to the sector.
    Matrix g = Matrix::Zero(size, size);
    for (int k = k_lo; k < k_hi; ++k) {
      const double c =
          (kPi / 4.0) * std::sqrt(double(k + 1) * double(total - k));
      g(k + 1 - k_lo, k - k_lo) += c;
      g(k - k_lo, k + 1 - k_lo) -= c;
    }
    blocks->sector.push_back(std::move(idx));
    blocks->unitary.push_back(exp_antihermitian(g));
  }
  const auto& ref = *blocks;
  g_bs_cache.emplace(cutoff, std::move(blocks));
  return ref;
}

Matrix bs_left_apply(const BeamSplitterBlocks& b, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (size_t s = 0; s < b.sector.size(); ++s) {
    const auto& idx = b.sector[s];
    const int n = static_cast<int>(idx.size());
    Matrix sub(n, m.cols());
    for (int r = 0; r < n; ++r) sub.row(r) = m.row(idx[r]);
    sub = b.unitary[s] * sub;
    for (int r = 0; r < n; ++r) out.row(idx[r]) = sub.row(r);
  }
  return out;
}

}  // namespace detail

FockOperator beam_splitter_50(const FockOperator& o) {
  require(o.n_modes() == 2, "beam_splitter_50: two-mode operator required");
  require(o.mode_dims[0] == o.mode_dims[1],
          "beam_splitter_50: equal cutoffs required");
  const auto& blocks = detail::beam_splitter_blocks(o.mode_dims[0]);
  Matrix half = detail::bs_left_apply(blocks, o.data);          // U m
  Matrix out = detail::bs_left_apply(blocks, half.adjoint());   // U m^dag U^dag
  return {out.adjoint(), o.mode_dims};
}

TwoModeState beam_splitter_50(const TwoModeState& s) {
  TwoModeState out = s;
  out.op = beam_splitter_50(s.op);
  if (s.pure) out.pure = beam_splitter_apply(*s.pure, s.dim_a());
  return out;
}

Vector beam_splitter_apply(const Vector& psi, int cutoff) {
  require(psi.size() == Eigen::Index(cutoff) * cutoff,
          "beam_splitter_apply: vector length must be cutoff^2");
  const auto& blocks = detail::beam_splitter_blocks(cutoff);
  Vector out(psi.size());
  for (size_t s = 0; s < blocks.sector.size(); ++s) {
    const auto& idx = blocks.sector[s];
    const int n = static_cast<int>(idx.size());
    Vector sub(n);
    for (int r = 0; r < n; ++r) sub(r) = psi(idx[r]);
    sub = blocks.unitary[s] * sub;
    for (int r = 0; r < n; ++r) out(idx[r]) = sub(r);
  }
  return out;
}

FockOperator local_rotation(const FockOperator& o, double theta1,
                            double theta2) {
  require(o.n_modes() == 2, "local_rotation: two-mode operator required");
  const int da = o.mode_dims[0], db = o.mode_dims[1];
  Vector phase(da * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k)
      phase(i * db + k) = std::exp(Complex(0.0, -(theta1 * i + theta2 * k)));
  FockOperator out = o;
  out.data = phase.asDiagonal() * o.data * phase.conjugate().asDiagonal();
  return out;
}

TwoModeState local_rotation(const TwoModeState& s, double theta1,
                            double theta2) {
  TwoModeState out = s;
  out.op = local_rotation(s.op, theta1, theta2);
  if (s.pure) {
    const int da = s.dim_a(), db = s.dim_b();
    Vector psi = *s.pure;
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < db; ++k)
        psi(i * db + k) *= std::exp(Complex(0.0, -(theta1 * i + theta2 * k)));
    out.pure = std::move(psi);
  }
  return out;
}

FockOperator rotate_mode(const FockOperator& single_mode, double theta) {
  require(single_mode.n_modes() == 1, "rotate_mode: single-mode required");
  const int d = single_mode.dim();
  Vector phase(d);
  for (int n = 0; n < d; ++n) phase(n) = std::exp(Complex(0.0, -theta * n));
  FockOperator out = single_mode;
  out.data = phase.asDiagonal() * single_mode.data *
             phase.conjugate().asDiagonal();
  return out;
}

Matrix exp_antihermitian(const Matrix& g) {
  const Matrix h = Complex(0.0, -1.0) * g;
  if (max_abs(h - h.adjoint()) > 1e-10 * (1.0 + max_abs(h)))
    throw std::invalid_argument("exp_antihermitian: generator not anti-hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases = (Complex(0.0, 1.0) * es.eigenvalues().cast<Complex>().array())
                      .exp()
                      .matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix conjugate_mode(const Matrix& m, const Matrix& u, int mode, int dim_a,
                      int dim_b) {
  require(mode == 0 || mode == 1, "conjugate_mode: mode must be 0 or 1");
  auto left = [&](const Matrix& x) {
    Matrix out = Matrix::Zero(x.rows(), x.cols());
    if (mode == 0) {
      for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_a; ++j)
          if (u(i, j) != 0.0)
            out.middleRows(i * dim_b, dim_b) +=
                u(i, j) * x.middleRows(j * dim_b, dim_b);
    } else {
      for (int i = 0; i < dim_a; ++i)
        out.middleRows(i * dim_b, dim_b) = u * x.middleRows(i * dim_b, dim_b);
    }
    return out;
  };
  return left(left(m).adjoint()).adjoint();
}

namespace {

Matrix squeeze_unitary(int dim, double r) {
  FockOperator a = annihilation_op(dim);
  const Matrix ad = a.data.adjoint();
  Matrix g = 0.5 * r * (ad * ad - a.data * a.data);
  return exp_antihermitian(g);
}

}  // namespace

FockOperator squeeze_mode(const FockOperator& single_mode, double r,
                          double max_abs_r) {
  require(single_mode.n_modes() == 1, "squeeze_mode: single-mode required");
  require(std::abs(r) <= max_abs_r, "squeeze: |r| exceeds truncation-safe bound");
  const Matrix u = squeeze_unitary(single_mode.dim(), r);
  FockOperator out = single_mode;
  out.data = u * single_mode.data * u.adjoint();
  return out;
}

FockOperator local_squeeze(const FockOperator& o, double r1, double r2,
                           double max_abs_r) {
  require(o.n_modes() == 2, "local_squeeze: two-mode operator required");
  require(std::abs(r1) <= max_abs_r && std::abs(r2) <= max_abs_r,
          "squeeze: |r| exceeds truncation-safe bound");
  const int da = o.mode_dims[0], db = o.mode_dims[1];
  FockOperator out = o;
  if (r1 != 0.0)
    out.data = conjugate_mode(out.data, squeeze_unitary(da, r1), 0, da, db);
  if (r2 != 0.0)
    out.data = conjugate_mode(out.data, squeeze_unitary(db, r2), 1, da, db);
  return out;
}

TwoModeState local_squeeze(const TwoModeState& s, double r1, double r2,
                           double max_abs_r) {
  TwoModeState out = s;
  out.op = local_squeeze(s.op, r1, r2, max_abs_r);
  if (s.pure) {
    const int da = s.dim_a(), db = s.dim_b();
    Eigen::Map<const Matrix> psi(s.pure->data(), db, da);  // column i = mode-A index
    Matrix m = psi;
    if (r2 != 0.0) m = squeeze_unitary(db, r2) * m;
    if (r1 != 0.0) m = m * squeeze_unitary(da, r1).transpose();
    Vector flat(da * db);
    for (int i = 0; i < da; ++i) flat.segment(i * db, db) = m.col(i);
    out.pure = std::move(flat);
  }
  return out;
}

Complex expectation(const FockOperator& s, const FockOperator& obs) {
  require(s.dim() == obs.dim(), "expectation: dimension mismatch");
  return (s.data.cwiseProduct(obs.data.transpose())).sum();
}

Complex expectation(const TwoModeState& s, const FockOperator& obs) {
  return expectation(s.op, obs);
}

Complex expectation_kron(const FockOperator& s, const Matrix& ma,
                         const Matrix& mb) {
  require(s.n_modes() == 2, "expectation_kron: two-mode operator required");
  const int da = s.mode_dims[0], db = s.mode_dims[1];
  require(ma.rows() == da && mb.rows() == db,
          "expectation_kron: factor dimension mismatch");
  // Tr(s (ma (x) mb)) = sum_{ij} ma(j,i) Tr(block_ij(s) mb)
  Complex acc = 0.0;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      if (ma(j, i) == 0.0) continue;
      acc += ma(j, i) * s.data.block(i * db, j * db, db, db)
                            .cwiseProduct(mb.transpose())
                            .sum();
    }
  return acc;
}

Complex expectation_kron_pure(const Vector& psi, int dim_a, int dim_b,
                              const Matrix& ma, const Matrix& mb) {
  require(psi.size() == Eigen::Index(dim_a) * dim_b,
          "expectation_kron_pure: vector length mismatch");
  Eigen::Map<const Matrix> m(psi.data(), dim_b, dim_a);
  // <psi| ma (x) mb |psi> = sum_ij ma(i,j) (M^dag mb M)(i,j), M(k,i) = psi[(i,k)]
  return ((m.adjoint() * mb * m).cwiseProduct(ma)).sum();
}

FockOperator partial_trace(const FockOperator& o, int keep) {
  require(o.n_modes() == 2, "partial_trace: two-mode operator required");
  require(keep == 0 || keep == 1, "partial_trace: keep must be 0 or 1");
  const int da = o.mode_dims[0], db = o.mode_dims[1];
  if (keep == 0) {
    Matrix out = Matrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        out(i, j) = o.data.block(i * db, j * db, db, db).trace();
    return {std::move(out), {da}};
  }
  Matrix out = Matrix::Zero(db, db);
  for (int i = 0; i < da; ++i) out += o.data.block(i * db, i * db, db, db);
  return {std::move(out), {db}};
}

FockOperator partial_trace(const TwoModeState& s, int keep) {
  return partial_trace(s.op, keep);
}

RealMatrix hermite_functions(const std::vector<double>& grid, int n_max) {
  const int nq = static_cast<int>(grid.size());
  RealMatrix psi(n_max, nq);
  for (int q = 0; q < nq; ++q) {
    const double x = grid[q];
    psi(0, q) = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    if (n_max > 1) psi(1, q) = std::sqrt(2.0) * x * psi(0, q);
    for (int n = 2; n < n_max; ++n)
      psi(n, q) = std::sqrt(2.0 / n) * x * psi(n - 1, q) -
                  std::sqrt(double(n - 1) / n) * psi(n - 2, q);
  }
  return psi;
}

RealVector position_distribution(const FockOperator& s,
                                 const std::vector<double>& grid) {
  require(s.n_modes() == 1, "position_distribution: single-mode required");
  if (!s.is_hermitian(1e-10))
    throw std::invalid_argument("position_distribution: non-hermitian input");
  for (size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1],
            "position_distribution: grid must be strictly increasing");
  const int d = s.dim();
  const RealMatrix psi = hermite_functions(grid, d);
  const Matrix m = s.data * psi.cast<Complex>();
  RealVector p(grid.size());
  for (int q = 0; q < static_cast<int>(grid.size()); ++q) {
    Complex val = (psi.col(q).cast<Complex>().array() * m.col(q).array()).sum();
    if (std::abs(val.imag()) > 1e-10)
      throw std::runtime_error("position_distribution: imaginary residue");
    p(q) = val.real();
  }
  return p;
}

RealMatrix wigner_function(const FockOperator& s,
                           const std::vector<double>& x_grid,
                           const std::vector<double>& p_grid) {
  require(s.n_modes() == 1, "wigner_function: single-mode required");
  if (!s.is_hermitian(1e-10))
    throw std::invalid_argument("wigner_function: non-hermitian input");
  const int d = s.dim();

  std::vector<double> sqrt_fact(d), fact(d);
  fact[0] = 1.0;
  for (int n = 1; n < d; ++n) fact[n] = fact[n - 1] * n;
  for (int n = 0; n < d; ++n) sqrt_fact[n] = std::sqrt(fact[n]);

  RealMatrix w(x_grid.size(), p_grid.size());
  std::vector<Complex> upow(d), vpow(d);  // (2 alpha)^k, (2 alpha*)^k
  for (size_t xi = 0; xi < x_grid.size(); ++xi) {
    for (size_t pi = 0; pi < p_grid.size(); ++pi) {
      const Complex alpha(x_grid[xi] / std::sqrt(2.0),
                          p_grid[pi] / std::sqrt(2.0));
      const double gauss =
          std::exp(-2.0 * std::norm(alpha)) / kPi;
      upow[0] = vpow[0] = 1.0;
      for (int k = 1; k < d; ++k) {
        upow[k] = upow[k - 1] * (2.0 * alpha);
        vpow[k] = vpow[k - 1] * (2.0 * std::conj(alpha));
      }
      // W_{|n><m|} = gauss / sqrt(n! m!) *
      //   sum_k (-1)^k C(n,k) m!/(m-k)! (2a*)^{n-k} (2a)^{m-k}
      Complex acc = 0.0;
      for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
          const Complex rho_nm = s.data(n, m);
          if (rho_nm == 0.0) continue;
          Complex kern = 0.0;
          double binom = 1.0;  // C(n,k)
          double perm = 1.0;   // m!/(m-k)!
          double sign = 1.0;
          const int kmax = std::min(n, m);
          for (int k = 0; k <= kmax; ++k) {
            kern += sign * binom * perm * vpow[n - k] * upow[m - k];
            sign = -sign;
            binom *= double(n - k) / double(k + 1);
            perm *= double(m - k);
          }
          acc += rho_nm * kern / (sqrt_fact[n] * sqrt_fact[m]);
        }
      }
      w(xi, pi) = gauss * acc.real();
    }
  }
  return w;
}

namespace {

// Smallest d with an (upper-bound estimate of) P(Poisson(lambda) >= d)
// below eps.  The beam splitter mixes modes, so per-mode cutoffs must hold
// the full total-photon-number support of the state.
int poisson_quantile(double lambda, double log_eps) {
  if (lambda <= 0.0) return 1;
  int d = static_cast<int>(std::ceil(lambda)) + 1;
  for (; d < 4096; ++d) {
    double lp = -lambda + d * std::log(lambda) - std::lgamma(double(d) + 1.0);
    if (lambda < d + 1) lp -= std::log(1.0 - lambda / (d + 1));  // tail sum
    if (lp <= log_eps) break;
  }
  return d;
}

}  // namespace

int auto_cutoff(double nbar, double level_j) {
  const int floor_rule =
      static_cast<int>(std::ceil(nbar + 6.0 * std::sqrt(nbar + 1.0)));
  const int tail_rule = poisson_quantile(nbar, std::log(1e-12));
  const int headroom = static_cast<int>(std::ceil(2.0 * level_j)) + 4;
  return std::max(4, std::max(floor_rule, tail_rule) + headroom);
}

}  // namespace srur
