#include "criteria.hpp"

#include "weyl.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srur::criteria {

namespace {

constexpr double kPi = 3.14159265358979323846;

int keep_mode(Channel c) { return c == Channel::xminus_pplus ? 1 : 0; }

Verdict make_verdict(bool detected, std::string level, double witness,
                     double determinant, moments::MomentMatrix evidence,
                     VerdictParams params) {
  Verdict v;
  v.detected = detected;
  v.level = std::move(level);
  v.witness = witness;
  v.determinant = determinant;
  v.evidence = std::move(evidence);
  v.params = std::move(params);
  return v;
}

double real_det(const Matrix& m) {
  const Complex det = m.determinant();
  return det.real();
}

// Tr(rho^Gamma (MA (x) MB)) through either the pure-state shortcut or the
// materialized partial transpose.
struct PtExpect {
  const TwoModeState& s;
  std::optional<FockOperator> pt;  // filled when no pure vector is available

  explicit PtExpect(const TwoModeState& state) : s(state) {
    if (!s.pure)
      pt = FockOperator{
          partial_transpose_raw(s.op.data, s.dim_a(), s.dim_b()),
          s.op.mode_dims};
  }
  Complex operator()(const Matrix& ma, const Matrix& mb) const {
    if (s.pure)
      return expectation_kron_pure(*s.pure, s.dim_a(), s.dim_b(), ma,
                                   mb.transpose());
    return expectation_kron(*pt, ma, mb);
  }
};

}  // namespace

std::string to_string(Channel c) {
  return c == Channel::xminus_pplus ? "xm-pp" : "xp-pm";
}

std::string Verdict::report() const {
  std::ostringstream os;
  os << "criterion: " << level << "\n";
  os << "detected:  " << (detected ? "yes" : "no") << "\n";
  os << "witness:   " << witness << "\n";
  if (std::isfinite(determinant)) os << "det:       " << determinant << "\n";
  if (params.channel)
    os << "channel:   " << to_string(*params.channel) << "\n";
  os << "theta:     (" << params.theta1 << ", " << params.theta2 << ")\n";
  if (params.r1 != 0.0 || params.r2 != 0.0)
    os << "squeeze:   (" << params.r1 << ", " << params.r2 << ")\n";
  if (!evidence.basis.empty()) {
    os << "rows:      ";
    for (size_t i = 0; i < evidence.basis.size(); ++i)
      os << (i ? ", " : "") << evidence.basis[i];
    os << "\n";
    os << "matrix:\n" << evidence.m << "\n";
  }
  return os.str();
}

FockOperator marginal_pt_state(const TwoModeState& s, double theta1,
                               double theta2, Channel channel) {
  if (s.op.n_modes() != 2)
    throw std::invalid_argument("marginal_pt_state: two-mode state required");
  TwoModeState work = local_rotation(s, theta1, theta2);
  work = partial_transpose(work);
  work = beam_splitter_50(work);
  return partial_trace(work, keep_mode(channel));
}

namespace {

// Staged hierarchy verdict for a single-mode marginal.
Verdict marginal_verdict(const FockOperator& marginal, double level_j,
                         VerdictParams params,
                         MarginalSrurReport* report = nullptr) {
  const int two_j = weyl::two_j_from_level(level_j);

  const auto m_half =
      moments::covariance_matrix(marginal, weyl::single_mode_basis(0.5));
  const double w_half = moments::min_eigenvalue(m_half);
  const double det_half = moments::principal_minor(m_half, {0, 1});
  if (report) {
    report->m_half = m_half;
    report->det_half = det_half;
  }
  if (moments::negative_beyond_tolerance(
          w_half, moments::spectral_scale(m_half.m)))
    return make_verdict(true, "J=1/2", w_half, det_half, m_half, params);
  if (two_j == 1)
    return make_verdict(false, "J=1/2", w_half, det_half, m_half, params);

  const auto basis_one = weyl::single_mode_basis(1.0);
  const auto m_one = moments::covariance_matrix(marginal, basis_one);
  const Matrix comp = moments::schur_complement(m_one, 2);
  const double w_one = moments::min_eigenvalue(comp);
  const double det_comp = real_det(comp);
  std::vector<std::string> comp_labels;
  for (size_t i = 2; i < basis_one.size(); ++i)
    comp_labels.push_back(weyl::to_string(basis_one[i]));
  auto comp_mm = moments::make_moment_matrix(comp, std::move(comp_labels));
  if (report) {
    report->m_one = m_one;
    report->complement = comp;
    report->det_complement = det_comp;
    report->min_eig_complement = w_one;
  }
  if (moments::negative_beyond_tolerance(w_one,
                                         moments::spectral_scale(comp)))
    return make_verdict(true, "J=1", w_one, det_comp, comp_mm, params);
  if (two_j == 2)
    return make_verdict(false, "J=1", w_one, det_comp, comp_mm, params);

  const auto m_threehalf =
      moments::covariance_matrix(marginal, weyl::single_mode_basis(1.5));
  const double w_32 = moments::min_eigenvalue(m_threehalf);
  const double det_32 = real_det(m_threehalf.m);
  const bool det_32_fires = moments::negative_beyond_tolerance(
      w_32, moments::spectral_scale(m_threehalf.m));
  return make_verdict(det_32_fires, "J=3/2", w_32, det_32, m_threehalf,
                      params);
}

}  // namespace

Verdict marginal_srur(const TwoModeState& s, double theta1, double theta2,
                      double level_j, Channel channel) {
  const int two_j = weyl::two_j_from_level(level_j);
  if (two_j > 3)
    throw std::invalid_argument("marginal_srur: J beyond 3/2 not supported");
  VerdictParams params;
  params.theta1 = theta1;
  params.theta2 = theta2;
  params.channel = channel;
  const FockOperator marginal = marginal_pt_state(s, theta1, theta2, channel);
  return marginal_verdict(marginal, level_j, params);
}

MarginalSrurReport marginal_srur_report(const TwoModeState& s, double theta1,
                                        double theta2, Channel channel) {
  VerdictParams params;
  params.theta1 = theta1;
  params.theta2 = theta2;
  params.channel = channel;
  const FockOperator marginal = marginal_pt_state(s, theta1, theta2, channel);
  MarginalSrurReport report;
  report.verdict = marginal_verdict(marginal, 1.0, params, &report);
  return report;
}

Verdict full_srur(const TwoModeState& s, double level_j,
                  const std::vector<int>& rows) {
  const auto full_basis = weyl::two_mode_basis(level_j);
  std::vector<weyl::TwoModeIndex> basis;
  if (rows.empty()) {
    basis = full_basis;
  } else {
    for (int r : rows) {
      if (r < 0 || r >= static_cast<int>(full_basis.size()))
        throw std::invalid_argument("full_srur: row index out of range");
      basis.push_back(full_basis[r]);
    }
  }

  moments::MomentMatrix mm;
  if (s.pure) {
    mm = moments::pt_covariance_matrix_pure(*s.pure, s.dim_a(), s.dim_b(),
                                            basis);
  } else {
    TwoModeState pt = partial_transpose(s);
    mm = moments::covariance_matrix(pt.op, basis);
  }
  const double w = moments::min_eigenvalue(mm);
  const double det = real_det(mm.m);
  const bool fired = moments::negative_beyond_tolerance(
      w, moments::spectral_scale(mm.m));
  VerdictParams params;
  return make_verdict(fired, "J=" + weyl::half_integer_string(
                                        weyl::two_j_from_level(level_j)),
                      w, det, mm, params);
}

namespace {

double shannon_entropy(const RealVector& p, double step) {
  RealVector integrand(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double v = std::max(p(i), 1e-300);
    integrand(i) = -v * std::log(v);
  }
  return moments::simpson(integrand, step);
}

double marginal_entropy(const FockOperator& marginal, bool momentum) {
  const FockOperator op =
      momentum ? rotate_mode(marginal, kPi / 2.0) : marginal;
  const double nbar =
      std::max(0.0, expectation(op, number_op(op.dim())).real());
  const double bound = std::sqrt(2.0 * nbar) + 6.0;
  const auto grid = moments::uniform_grid(-bound, bound, 2049);
  const RealVector p = position_distribution(op, grid);
  return shannon_entropy(p, grid[1] - grid[0]);
}

}  // namespace

std::pair<double, double> entropic_slacks(const TwoModeState& s, double theta1,
                                          double theta2) {
  TwoModeState work = local_rotation(s, theta1, theta2);
  work = beam_splitter_50(work);
  const FockOperator plus = partial_trace(work, 0);   // carries (x+, p+)
  const FockOperator minus = partial_trace(work, 1);  // carries (x-, p-)
  const double bound = std::log(kPi) + 1.0;           // ln(pi e)
  const double slack_xm_pp =
      marginal_entropy(minus, false) + marginal_entropy(plus, true) - bound;
  const double slack_xp_pm =
      marginal_entropy(plus, false) + marginal_entropy(minus, true) - bound;
  return {slack_xm_pp, slack_xp_pm};
}

Verdict entropic_criterion(const TwoModeState& s, double theta1,
                           double theta2) {
  const auto [s1, s2] = entropic_slacks(s, theta1, theta2);
  const double witness = std::min(s1, s2);
  VerdictParams params;
  params.theta1 = theta1;
  params.theta2 = theta2;
  params.channel = s1 <= s2 ? Channel::xminus_pplus : Channel::xplus_pminus;
  return make_verdict(witness < -kEntropicTol, "entropic", witness,
                      std::numeric_limits<double>::quiet_NaN(),
                      moments::make_moment_matrix(Matrix(0, 0), {}), params);
}

Verdict simon_criterion(const TwoModeState& s) {
  const int da = s.dim_a(), db = s.dim_b();
  const Matrix a = annihilation_op(da).data;
  const Matrix b = annihilation_op(db).data;
  const Matrix ida = Matrix::Identity(da, da);
  const Matrix idb = Matrix::Identity(db, db);
  const PtExpect expect(s);

  // f = (a, a^dag, b, b^dag) as (mode-A factor, mode-B factor) pairs.
  std::vector<std::pair<Matrix, Matrix>> f = {
      {a, idb}, {a.adjoint(), idb}, {ida, b}, {ida, b.adjoint()}};
  Vector mean(4);
  for (int i = 0; i < 4; ++i) mean(i) = expect(f[i].first, f[i].second);

  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Matrix ma = f[i].first.adjoint() * f[j].first;
      const Matrix mb = f[i].second.adjoint() * f[j].second;
      m(i, j) = expect(ma, mb) - std::conj(mean(i)) * mean(j);
    }
  auto mm = moments::make_moment_matrix(
      m, {"a", "a^dag", "b", "b^dag"});
  const double w = moments::min_eigenvalue(mm);
  const bool fired = moments::negative_beyond_tolerance(
      w, moments::spectral_scale(mm.m));
  return make_verdict(fired, "simon", w, real_det(mm.m), mm, {});
}

Verdict duan_criterion(const TwoModeState& s) {
  const int da = s.dim_a(), db = s.dim_b();
  const Matrix a = annihilation_op(da).data;
  const Matrix b = annihilation_op(db).data;
  const Matrix ida = Matrix::Identity(da, da);
  const Matrix idb = Matrix::Identity(db, db);
  const PtExpect expect(s);

  const Complex mean_a = expect(a, idb);
  const Complex mean_b = expect(ida, b);
  Matrix m(2, 2);
  m(0, 0) = expect(a.adjoint() * a, idb) - std::norm(mean_a);
  m(1, 1) = expect(ida, b.adjoint() * b) - std::norm(mean_b);
  m(0, 1) = expect(a.adjoint(), b) - std::conj(mean_a) * mean_b;
  m(1, 0) = std::conj(m(0, 1));
  auto mm = moments::make_moment_matrix(m, {"a", "b"});
  const double w = moments::min_eigenvalue(mm);
  // Determinant is the optimized-c^2 inequality slack:
  // <da^dag da><db^dag db> - |<da^dag db>|^2.
  const double det = real_det(mm.m);
  const bool fired = moments::negative_beyond_tolerance(
      w, moments::spectral_scale(mm.m));
  return make_verdict(fired, "duan", w, det, mm, {});
}

double duan_sum_form(const TwoModeState& s, double c) {
  if (c == 0.0) throw std::invalid_argument("duan_sum_form: c must be nonzero");
  const int da = s.dim_a(), db = s.dim_b();
  auto [xa, pa] = quadrature_ops(da);
  auto [xb, pb] = quadrature_ops(db);
  const Matrix ida = Matrix::Identity(da, da);
  const Matrix idb = Matrix::Identity(db, db);
  auto expect = [&](const Matrix& ma, const Matrix& mb) {
    return expectation_kron(s.op, ma, mb).real();
  };
  const double ci = 1.0 / c;
  // <X^2> with X = c x1 + x2 / c, then the primed combination.
  auto quad_var = [&](const Matrix& qa, const Matrix& qb, double sb) {
    const double m1 = expect(qa, idb), m2 = expect(ida, qb);
    const double q11 = expect(qa * qa, idb);
    const double q22 = expect(ida, qb * qb);
    const double q12 = expect(qa, qb);
    const double mean = c * m1 + sb * ci * m2;
    return c * c * q11 + ci * ci * q22 + 2.0 * c * sb * ci * q12 -
           mean * mean;
  };
  const double var_x = quad_var(xa.data, xb.data, +1.0);
  const double var_p = quad_var(pa.data, pb.data, -1.0);
  return var_x + var_p - (c * c + ci * ci);
}

double pt_min_eigenvalue(const TwoModeState& s) {
  const Matrix pt = partial_transpose_raw(s.op.data, s.dim_a(), s.dim_b());
  return moments::min_eigenvalue(pt);
}

Verdict scan_local_params(const TwoModeState& s, CriterionKind kind,
                          double level_j, Channel channel,
                          const LocalScanGrid& grid) {
  if (grid.theta1.empty() || grid.theta2.empty() || grid.r1.empty() ||
      grid.r2.empty())
    throw std::invalid_argument("scan_local_params: empty grid");

  std::optional<Verdict> best;
  for (double t1 : grid.theta1)
    for (double t2 : grid.theta2)
      for (double r1 : grid.r1)
        for (double r2 : grid.r2) {
          TwoModeState work = local_rotation(s, t1, t2);
          if (r1 != 0.0 || r2 != 0.0) work = local_squeeze(work, r1, r2);
          Verdict v;
          switch (kind) {
            case CriterionKind::srur_marginal:
              v = marginal_srur(work, 0.0, 0.0, level_j, channel);
              break;
            case CriterionKind::srur_full:
              v = full_srur(work, level_j);
              break;
            case CriterionKind::entropic:
              v = entropic_criterion(work, 0.0, 0.0);
              break;
            case CriterionKind::simon:
              v = simon_criterion(work);
              break;
            case CriterionKind::duan:
              v = duan_criterion(work);
              break;
          }
          v.params.theta1 = t1;
          v.params.theta2 = t2;
          v.params.r1 = r1;
          v.params.r2 = r2;
          if (!best || v.witness < best->witness) best = std::move(v);
        }
  return *best;
}

}  // namespace srur::criteria
