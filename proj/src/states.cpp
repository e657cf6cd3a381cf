#include "states.hpp"

#include <cmath>
#include <stdexcept>

namespace srur::states {

namespace {

constexpr double kDeficitTol = 1e-8;

void check_deficit(double deficit, const char* what) {
  if (std::abs(deficit) > kDeficitTol)
    throw std::invalid_argument(std::string(what) +
                                ": cutoff too small (trace deficit above 1e-8)");
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

TwoModeState from_pure(Vector psi, int cutoff, const char* what) {
  const double norm2 = psi.squaredNorm();
  check_deficit(1.0 - norm2, what);
  psi /= std::sqrt(norm2);
  TwoModeState s;
  s.op = FockOperator{psi * psi.adjoint(), {cutoff, cutoff}};
  s.trace = 1.0;
  s.positive = Positivity::yes;
  s.pure = std::move(psi);
  return s;
}

}  // namespace

Vector coherent_vector(double alpha, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("coherent_vector: cutoff < 2");
  Vector v(cutoff);
  v(0) = std::exp(-0.5 * alpha * alpha);
  for (int n = 1; n < cutoff; ++n) v(n) = v(n - 1) * alpha / std::sqrt(double(n));
  return v;
}

TwoModeState dephased_cat(const CatParams& params, int cutoff) {
  if (params.p < 0.0 || params.p > 1.0)
    throw std::invalid_argument("dephased_cat: p must lie in [0, 1]");
  const double alpha = params.alpha;
  const Vector plus = kron_vec(coherent_vector(alpha, cutoff),
                               coherent_vector(alpha, cutoff));
  const Vector minus = kron_vec(coherent_vector(-alpha, cutoff),
                                coherent_vector(-alpha, cutoff));
  const double norm_factor =
      1.0 / (2.0 - 2.0 * params.p * std::exp(-4.0 * alpha * alpha));

  Matrix rho = plus * plus.adjoint() + minus * minus.adjoint() -
               params.p * (plus * minus.adjoint() + minus * plus.adjoint());
  rho *= norm_factor;

  const double tr = rho.trace().real();
  check_deficit(1.0 - tr, "dephased_cat");
  rho /= tr;

  TwoModeState s;
  s.op = FockOperator{std::move(rho), {cutoff, cutoff}};
  s.trace = 1.0;
  s.positive = Positivity::yes;
  return s;
}

TwoModeState beam_split_number(int n, int m, int cutoff) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("beam_split_number: photon numbers must be >= 0");
  if (cutoff <= n + m + 1)
    throw std::invalid_argument("beam_split_number: cutoff must exceed n+m+1");
  Vector psi = Vector::Zero(cutoff * cutoff);
  psi(n * cutoff + m) = 1.0;
  psi = beam_splitter_apply(psi, cutoff);
  return from_pure(std::move(psi), cutoff, "beam_split_number");
}

TwoModeState pnes(const PnesParams& params, int cutoff) {
  const double norm2 = params.c0 * params.c0 + params.c1 * params.c1 +
                       params.c2 * params.c2;
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("pnes: coefficients must be normalized");
  if (cutoff < 4) throw std::invalid_argument("pnes: cutoff must be >= 4");
  Vector psi = Vector::Zero(cutoff * cutoff);
  psi(0) = params.c0;
  psi(1 * cutoff + 1) = params.c1;
  psi(2 * cutoff + 2) = params.c2;
  return from_pure(std::move(psi), cutoff, "pnes");
}

TwoModeState two_mode_squeezed(double r, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("two_mode_squeezed: cutoff < 2");
  const double t = std::tanh(r);
  const double amp0 = std::sqrt(1.0 - t * t);
  Vector psi = Vector::Zero(cutoff * cutoff);
  double amp = amp0;
  for (int n = 0; n < cutoff; ++n) {
    psi(n * cutoff + n) = amp;
    amp *= t;
  }
  return from_pure(std::move(psi), cutoff, "two_mode_squeezed");
}

TwoModeState coherent_product(double alpha1, double alpha2, int cutoff) {
  Vector psi = kron_vec(coherent_vector(alpha1, cutoff),
                        coherent_vector(alpha2, cutoff));
  return from_pure(std::move(psi), cutoff, "coherent_product");
}

int cat_auto_cutoff(double alpha, double level_j) {
  // Criteria pipelines beam-split the state, so size by the total photon
  // number (Poisson with intensity 2 alpha^2), not the per-mode mean.
  return auto_cutoff(2.0 * alpha * alpha, level_j);
}

int bns_auto_cutoff(int n, int m) {
  // Finitely supported on total photon number n+m; degree-4 observables need
  // five extra levels for exact moments.
  return n + m + 6;
}

int pnes_auto_cutoff() { return 8; }

int squeezed_auto_cutoff(double r, double level_j) {
  // Geometric number tails: tanh^{2d}|r| below 1e-12.
  const double t = std::abs(std::tanh(r));
  int tail = 4;
  if (t > 0.0) tail = static_cast<int>(std::ceil(std::log(1e-12) /
                                                 (2.0 * std::log(t))));
  const int base = auto_cutoff(2.0 * std::sinh(r) * std::sinh(r), level_j);
  return std::max(base, tail + static_cast<int>(std::ceil(2.0 * level_j)) + 4);
}

int coherent_auto_cutoff(double alpha1, double alpha2, double level_j) {
  return auto_cutoff(alpha1 * alpha1 + alpha2 * alpha2, level_j);
}

}  // namespace srur::states
