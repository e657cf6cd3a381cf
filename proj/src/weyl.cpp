#include "weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace srur::weyl {

namespace {

using Int = __int128;

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Exact rational with gcd normalization after every operation.
struct Rat {
  Int num = 0;
  Int den = 1;

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = int_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Rat& operator*=(const Rat& o) {
    // Cross-reduce first to keep intermediates small.
    Rat a{num, o.den}, b{o.num, den};
    a.reduce();
    b.reduce();
    num = a.num * b.num;
    den = a.den * b.den;
    reduce();
    return *this;
  }
  double value() const {
    return double((long double)(num) / (long double)(den));
  }
};

constexpr int kMaxFact = 33;

Int int_factorial(int n) {
  static const auto table = [] {
    std::array<Int, kMaxFact + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kMaxFact; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[n];
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double log_factorial(int n) { return std::lgamma(double(n) + 1.0); }

bool cg_arguments_vanish(int two_j1, int two_m1, int two_j2, int two_m2,
                         int two_j, int two_m) {
  auto bad_index = [](int tj, int tm) {
    return tj < 0 || std::abs(tm) > tj || (tj - tm) % 2 != 0;
  };
  if (bad_index(two_j1, two_m1) || bad_index(two_j2, two_m2) ||
      bad_index(two_j, two_m))
    return true;
  if (two_m1 + two_m2 != two_m) return true;
  if (two_j > two_j1 + two_j2 || two_j < std::abs(two_j1 - two_j2)) return true;
  if ((two_j1 + two_j2 - two_j) % 2 != 0) return true;
  return false;
}

// Racah's formula, integer-exact path.  The vanishing checks above guarantee
// integral factorial arguments.
double clebsch_gordan_exact(int two_j1, int two_m1, int two_j2, int two_m2,
                            int two_j, int two_m) {
  const int a1 = (two_j1 + two_j2 - two_j) / 2;
  const int a2 = (two_j1 - two_j2 + two_j) / 2;
  const int a3 = (-two_j1 + two_j2 + two_j) / 2;
  const int a4 = (two_j1 + two_j2 + two_j) / 2 + 1;
  const int b1 = (two_j + two_m) / 2;
  const int b2 = (two_j - two_m) / 2;
  const int b3 = (two_j1 - two_m1) / 2;
  const int b4 = (two_j1 + two_m1) / 2;
  const int b5 = (two_j2 - two_m2) / 2;
  const int b6 = (two_j2 + two_m2) / 2;

  Rat pref{two_j + 1, 1};
  for (int f : {a1, a2, a3}) pref *= Rat{int_factorial(f), 1};
  pref *= Rat{1, int_factorial(a4)};
  for (int f : {b1, b2, b3, b4, b5, b6}) pref *= Rat{int_factorial(f), 1};

  const int c1 = (two_j - two_j2 + two_m1) / 2;  // (j-j2+m1) + k
  const int c2 = (two_j - two_j1 - two_m2) / 2;  // (j-j1-m2) + k
  const int k_lo = std::max({0, -c1, -c2});
  const int k_hi = std::min({a1, b3, b6});
  if (k_lo > k_hi) return 0.0;

  int max_arg = 0;
  for (int k = k_lo; k <= k_hi; ++k)
    max_arg = std::max({max_arg, k, a1 - k, b3 - k, b6 - k, c1 + k, c2 + k});

  // Common denominator (max_arg!)^6 divides evenly into every term.
  Int common = 1;
  for (int i = 0; i < 6; ++i) common *= int_factorial(max_arg);
  Int sum = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    Int term = common;
    for (int f : {k, a1 - k, b3 - k, b6 - k, c1 + k, c2 + k})
      term /= int_factorial(f);
    sum += (k % 2 == 0) ? term : -term;
  }
  Rat s{sum, common};
  s.reduce();
  return std::sqrt(pref.value()) * s.value();
}

// Same formula via log-gamma, for couplings beyond the exact-integer range.
double clebsch_gordan_double(int two_j1, int two_m1, int two_j2, int two_m2,
                             int two_j, int two_m) {
  const int a1 = (two_j1 + two_j2 - two_j) / 2;
  const int a2 = (two_j1 - two_j2 + two_j) / 2;
  const int a3 = (-two_j1 + two_j2 + two_j) / 2;
  const int a4 = (two_j1 + two_j2 + two_j) / 2 + 1;
  const int b1 = (two_j + two_m) / 2;
  const int b2 = (two_j - two_m) / 2;
  const int b3 = (two_j1 - two_m1) / 2;
  const int b4 = (two_j1 + two_m1) / 2;
  const int b5 = (two_j2 - two_m2) / 2;
  const int b6 = (two_j2 + two_m2) / 2;

  double log_pref = std::log(double(two_j + 1));
  log_pref += log_factorial(a1) + log_factorial(a2) + log_factorial(a3) -
              log_factorial(a4);
  log_pref += log_factorial(b1) + log_factorial(b2) + log_factorial(b3) +
              log_factorial(b4) + log_factorial(b5) + log_factorial(b6);

  const int c1 = (two_j - two_j2 + two_m1) / 2;
  const int c2 = (two_j - two_j1 - two_m2) / 2;
  const int k_lo = std::max({0, -c1, -c2});
  const int k_hi = std::min({a1, b3, b6});
  if (k_lo > k_hi) return 0.0;

  double sum = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    double log_den = log_factorial(k) + log_factorial(a1 - k) +
                     log_factorial(b3 - k) + log_factorial(b6 - k) +
                     log_factorial(c1 + k) + log_factorial(c2 + k);
    double term = std::exp(0.5 * log_pref - log_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_j, int two_m) {
  if (cg_arguments_vanish(two_j1, two_m1, two_j2, two_m2, two_j, two_m))
    return 0.0;
  if ((two_j1 + two_j2 + two_j) / 2 + 1 <= 9)
    return clebsch_gordan_exact(two_j1, two_m1, two_j2, two_m2, two_j, two_m);
  return clebsch_gordan_double(two_j1, two_m1, two_j2, two_m2, two_j, two_m);
}

std::string half_integer_string(int two_value) {
  if (two_value % 2 == 0) return std::to_string(two_value / 2);
  return std::to_string(two_value) + "/2";
}

std::string to_string(const MonomialIndex& idx) {
  return "T[" + half_integer_string(idx.two_j) + "," +
         half_integer_string(idx.two_m) + "]";
}

std::string to_string(const TwoModeIndex& idx) {
  if (idx.a.is_identity() && idx.b.is_identity()) return "1";
  std::string out;
  if (!idx.a.is_identity()) out += "TA" + to_string(idx.a).substr(1);
  if (!idx.b.is_identity()) {
    if (!out.empty()) out += "*";
    out += "TB" + to_string(idx.b).substr(1);
  }
  return out;
}

namespace {

std::mutex g_monomial_mutex;
std::map<std::tuple<int, int, int>, Matrix> g_monomial_cache;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

FockOperator monomial(const MonomialIndex& idx, int cutoff) {
  if (!idx.valid()) throw std::invalid_argument("monomial: invalid index");
  if (idx.is_identity()) return identity_op(cutoff);
  if (cutoff < idx.two_j + 2)
    throw std::invalid_argument("monomial: cutoff inadequate for order 2j");
  {
    std::lock_guard<std::mutex> lock(g_monomial_mutex);
    auto it = g_monomial_cache.find({idx.two_j, idx.two_m, cutoff});
    if (it != g_monomial_cache.end()) return {it->second, {cutoff}};
  }
  const int r = idx.x_power(), s = idx.p_power();
  auto [x, p] = quadrature_ops(cutoff);
  std::vector<Matrix> p_pow(s + 1);
  p_pow[0] = Matrix::Identity(cutoff, cutoff);
  for (int k = 1; k <= s; ++k) p_pow[k] = p_pow[k - 1] * p.data;
  Matrix x_pow = Matrix::Identity(cutoff, cutoff);
  for (int k = 0; k < r; ++k) x_pow = x_pow * x.data;

  Matrix m = Matrix::Zero(cutoff, cutoff);
  for (int k = 0; k <= s; ++k)
    m += binomial(s, k) * (p_pow[k] * x_pow * p_pow[s - k]);
  m *= std::pow(2.0, -s);
  {
    std::lock_guard<std::mutex> lock(g_monomial_mutex);
    g_monomial_cache.insert({{idx.two_j, idx.two_m, cutoff}, m});
  }
  return {std::move(m), {cutoff}};
}

FockOperator monomial(const TwoModeIndex& idx, int cutoff_a, int cutoff_b) {
  return tensor(monomial(idx.a, cutoff_a), monomial(idx.b, cutoff_b));
}

std::vector<ProductTerm> monomial_product(const MonomialIndex& a,
                                          const MonomialIndex& b) {
  if (!a.valid() || !b.valid())
    throw std::invalid_argument("monomial_product: invalid index");
  const int two_m = a.two_m + b.two_m;
  // tau_jm = T_jm / sqrt((j+m)!(j-m)!)
  const double tau_scale =
      std::sqrt(factorial(a.x_power()) * factorial(a.p_power()) *
                factorial(b.x_power()) * factorial(b.p_power()));
  std::vector<ProductTerm> terms;
  for (int two_jj = std::abs(a.two_j - b.two_j); two_jj <= a.two_j + b.two_j;
       two_jj += 2) {
    if (std::abs(two_m) > two_jj) continue;
    const double cg =
        clebsch_gordan(a.two_j, a.two_m, b.two_j, b.two_m, two_jj, two_m);
    if (cg == 0.0) continue;
    const int order_drop = (a.two_j + b.two_j - two_jj) / 2;
    const int s0 = (a.two_j + b.two_j + two_jj) / 2 + 1;
    const int s1 = (a.two_j + b.two_j - two_jj) / 2;
    const int s2 = (b.two_j + two_jj - a.two_j) / 2;
    const int s3 = (two_jj + a.two_j - b.two_j) / 2;
    const double norm =
        std::sqrt(factorial(s0) / (double(two_jj + 1) * factorial(s1) *
                                   factorial(s2) * factorial(s3)));
    MonomialIndex out{two_jj, two_m};
    const double t_scale = tau_scale / std::sqrt(factorial(out.x_power()) *
                                                 factorial(out.p_power()));
    const Complex phase = std::pow(Complex(0.0, 0.5), order_drop);
    terms.push_back({out, phase * cg * norm * t_scale});
  }
  return terms;
}

std::vector<MonomialIndex> single_mode_basis(double level_j) {
  const int two_j_max = two_j_from_level(level_j);
  std::vector<MonomialIndex> basis;
  for (int two_j = 1; two_j <= two_j_max; ++two_j)
    for (int two_m = two_j; two_m >= -two_j; two_m -= 2)
      basis.push_back({two_j, two_m});
  return basis;
}

std::vector<TwoModeIndex> two_mode_basis(double level_j) {
  const int two_j_max = two_j_from_level(level_j);
  std::vector<TwoModeIndex> basis;
  for (int two_ja = 0; two_ja <= two_j_max; ++two_ja)
    for (int two_jb = 0; two_jb + two_ja <= two_j_max; ++two_jb) {
      if (two_ja == 0 && two_jb == 0) continue;
      for (int two_ma = two_ja; two_ma >= -two_ja; two_ma -= 2)
        for (int two_mb = two_jb; two_mb >= -two_jb; two_mb -= 2)
          basis.push_back({{two_ja, two_ma}, {two_jb, two_mb}});
    }
  std::sort(basis.begin(), basis.end(),
            [](const TwoModeIndex& u, const TwoModeIndex& v) {
              int d = (v.a.two_j + v.b.two_j) - (u.a.two_j + u.b.two_j);
              if (d != 0) return d > 0;
              d = u.a.two_j - v.a.two_j;
              if (d != 0) return d > 0;
              d = u.a.two_m - v.a.two_m;
              if (d != 0) return d > 0;
              d = u.b.two_m - v.b.two_m;
              return d > 0;
            });
  return basis;
}

int two_j_from_level(double level_j) {
  const int two_j = static_cast<int>(std::lround(2.0 * level_j));
  if (two_j < 1 || std::abs(2.0 * level_j - two_j) > 1e-9)
    throw std::invalid_argument("level J must be one of 1/2, 1, 3/2, ...");
  return two_j;
}

}  // namespace srur::weyl
