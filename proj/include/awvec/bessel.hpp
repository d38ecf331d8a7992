#pragma once

// Normalized Bessel functions J_alpha(x) = Gamma(alpha+1) (2/x)^alpha J_alpha(x)
// as truncated power series, the nonsymmetric Bessel function
//
//   E_alpha(x) = J_alpha(x) + i x / (2(alpha+1)) J_{alpha+1}(x),
//
// kept as a pair of real series (even part, odd part), the rank-one Dunkl
// operator, and the limits from Jacobi polynomials as n -> infinity.

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "awvec/convergence.hpp"
#include "awvec/errors.hpp"
#include "awvec/mutation.hpp"
#include "awvec/scalar.hpp"

namespace awvec {

/// Coefficients of x^0..x^K; everything beyond x^K is unknown, not zero.
template <class T>
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(int order) : c_(static_cast<std::size_t>(order) + 1, T(0)) {
    if (order < 0) throw InvalidParameters("negative truncation order");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const T& v : c_)
      if (!awvec::is_zero(v)) return false;
    return true;
  }
  /// Lowest k with a nonzero coefficient, or -1.
  int first_nonzero() const {
    for (int k = 0; k <= order(); ++k)
      if (!awvec::is_zero(c_[static_cast<std::size_t>(k)])) return k;
    return -1;
  }

  PowerSeries truncate(int K) const {
    if (K > order()) throw InvalidParameters("cannot extend a truncated series");
    PowerSeries r(K);
    for (int k = 0; k <= K; ++k) r[k] = (*this)[k];
    return r;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend PowerSeries operator*(const T& s, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int k = 0; k <= r.order(); ++k) r[k] = s * a[k];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a) { return T(-1) * a; }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  /// Known through x^{K-1}.
  PowerSeries derivative() const {
    if (order() == 0) throw InvalidParameters("derivative of an order-0 series");
    PowerSeries r(order() - 1);
    for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k + 1] * (k + 1);
    return r;
  }
  /// Known through x^{K+1}.
  PowerSeries times_x() const {
    PowerSeries r(order() + 1);
    for (int k = 0; k <= order(); ++k) r[k + 1] = (*this)[k];
    return r;
  }
  /// Requires a zero constant term; known through x^{K-1}.
  PowerSeries divide_by_x() const {
    if (!awvec::is_zero((*this)[0])) throw DivisionNotExact("series has a nonzero constant term");
    if (order() == 0) throw InvalidParameters("divide_by_x of an order-0 series");
    PowerSeries r(order() - 1);
    for (int k = 0; k <= r.order(); ++k) r[k] = (*this)[k + 1];
    return r;
  }
  /// f(-x)
  PowerSeries reflect() const {
    PowerSeries r = *this;
    for (int k = 1; k <= order(); k += 2) r[k] = -r[k];
    return r;
  }

  long double eval(long double x) const {
    long double acc = 0;
    for (int k = order(); k >= 0; --k) acc = acc * x + to_long_double(c_[static_cast<std::size_t>(k)]);
    return acc;
  }

 private:
  std::vector<T> c_;
};

namespace detail {

template <class T>
void check_pochhammer(const T& alpha, int count) {
  for (int j = 0; j < count; ++j)
    if (is_zero(T(alpha + 1 + j)))
      throw PoleAtNegativeInteger("(alpha+1)_k vanishes: alpha = " + std::to_string(to_double(alpha)));
}

}  // namespace detail

/// J_alpha(lambda x) through x^K: the x^{2k} coefficient is
/// (-lambda^2/4)^k / ((alpha+1)_k k!).
template <class T>
PowerSeries<T> bessel_series(const T& alpha, const T& lambda, int K) {
  detail::check_pochhammer(alpha, K / 2);
  PowerSeries<T> s(K);
  T term(1);
  T step = -lambda * lambda / 4;
  for (int k = 0; 2 * k <= K; ++k) {
    if (k > 0) term = term * step / ((alpha + k) * k);
    s[2 * k] = term;
  }
  return s;
}

template <class T>
struct NonsymBesselPair {
  PowerSeries<T> even;  // J_alpha(lambda x)
  PowerSeries<T> odd;   // lambda x / (2(alpha+1)) J_{alpha+1}(lambda x)
};

template <class T>
NonsymBesselPair<T> nonsym_bessel(const T& alpha, const T& lambda, int K, Mutation mutation = Mutation::None) {
  if (is_zero(T(alpha + 1))) throw PoleAtNegativeInteger("alpha = -1");
  PowerSeries<T> even = bessel_series(alpha, lambda, K);
  T scale = lambda / (2 * (alpha + 1));
  if (mutation == Mutation::BesselOddSign) scale = -scale;
  PowerSeries<T> odd = (scale * bessel_series(T(alpha + 1), lambda, K - 1)).times_x();
  return {std::move(even), std::move(odd)};
}

/// Real and imaginary parts of Y E - i lambda E with
/// (Y f)(x) = f'(x) + (alpha + 1/2) (f(x) - f(-x)) / x. On E = e + i o:
///   real: e' + lambda o,    imaginary: o' + (2 alpha + 1) o / x - lambda e.
/// Known through x^{K-1}.
template <class T>
std::pair<PowerSeries<T>, PowerSeries<T>> dunkl_eigen_residual(const T& alpha, const T& lambda, int K,
                                                               Mutation mutation = Mutation::None) {
  NonsymBesselPair<T> E = nonsym_bessel(alpha, lambda, K, mutation);
  const T half = T(alpha) + T(1) / 2;
  // (f - f(-x)) / x for f = e + i o is 2 i o / x; the even part drops out.
  PowerSeries<T> re = E.even.derivative() + lambda * E.odd.truncate(K - 1);
  PowerSeries<T> refl = (E.odd - E.odd.reflect()).divide_by_x();
  PowerSeries<T> im = E.odd.derivative() + half * refl - lambda * E.even.truncate(K - 1);
  return {std::move(re), std::move(im)};
}

/// The matrix [[0, x d/dx + 2(alpha+1)], [x^-1 d/dx, 0]] on (u, i w) with
/// u = J_alpha(lambda x), w = lambda/(2(alpha+1)) J_{alpha+1}(lambda x), minus
/// i lambda (u, i w). Returns the two real residuals
///   first:  x w' + 2(alpha+1) w - lambda u      (through x^K)
///   second: x^-1 u' + lambda w                  (through x^{K-2})
template <class T>
std::pair<PowerSeries<T>, PowerSeries<T>> vector_eigen_check(const T& alpha, const T& lambda, int K,
                                                             Mutation mutation = Mutation::None) {
  if (is_zero(T(alpha + 1))) throw PoleAtNegativeInteger("alpha = -1");
  PowerSeries<T> u = bessel_series(alpha, lambda, K);
  T scale = lambda / (2 * (alpha + 1));
  if (mutation == Mutation::BesselOddSign) scale = -scale;
  PowerSeries<T> w = scale * bessel_series(T(alpha + 1), lambda, K);
  PowerSeries<T> first = w.derivative().times_x() + T(2 * (alpha + 1)) * w - lambda * u;
  PowerSeries<T> second = u.derivative().divide_by_x() + lambda * w.truncate(K - 2);
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------
// Floating-point evaluation.

struct SeriesValue {
  long double value = 0;
  long double bound = 0;  // |first omitted term|
};

/// J_alpha(t) summed through t^K.
inline SeriesValue bessel_value(long double alpha, long double t, int K = 60) {
  for (int j = 0; j <= K / 2 + 1; ++j)
    if (alpha + 1 + j == 0) throw PoleAtNegativeInteger("(alpha+1)_k vanishes");
  const long double step = -t * t / 4;
  long double term = 1, sum = 0;
  int k = 0;
  for (; 2 * k <= K; ++k) {
    if (k > 0) term = term * step / ((alpha + k) * k);
    sum += term;
  }
  term = term * step / ((alpha + k) * k);
  return {sum, std::fabs(term)};
}

/// E_alpha(t) = J_alpha(t) + i t/(2(alpha+1)) J_{alpha+1}(t).
inline std::complex<long double> nonsym_bessel_value(long double alpha, long double t, int K = 60,
                                                     Mutation mutation = Mutation::None) {
  if (alpha + 1 == 0) throw PoleAtNegativeInteger("alpha = -1");
  long double im = t / (2 * (alpha + 1)) * bessel_value(alpha + 1, t, K).value;
  if (mutation == Mutation::BesselOddSign) im = -im;
  return {bessel_value(alpha, t, K).value, im};
}

// ---------------------------------------------------------------------------
// Limits from Jacobi polynomials.

/// Classical P_n^{(alpha,beta)}(t) by the three-term recurrence.
inline long double jacobi_classical(int n, long double a, long double b, long double t) {
  if (n == 0) return 1;
  long double p0 = 1, p1 = (a + 1) + (a + b + 2) * (t - 1) / 2;
  for (int k = 2; k <= n; ++k) {
    long double c = 2 * k + a + b;
    long double A = 2 * k * (k + a + b) * (c - 2);
    long double B = (c - 1) * (c * (c - 2) * t + a * a - b * b);
    long double C = 2 * (k + a - 1) * (k + b - 1) * c;
    long double p2 = (B * p1 - C * p0) / A;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// log of 2^{2n} n! / (n+alpha+beta+1)_n, the factor from classical to monic in z.
inline long double log_monic_factor(int n, long double a, long double b) {
  const long double s = a + b + 1;
  return 2 * n * std::log(2.0L) + std::lgamma(n + 1.0L) - (std::lgamma(2 * n + s) - std::lgamma(n + s));
}

/// log of 2^{alpha+beta} Gamma(alpha+1) / (pi^{1/2} n^{alpha+1/2}).
inline long double log_bessel_scale(int n, long double a, long double b) {
  return (a + b) * std::log(2.0L) + std::lgamma(a + 1) - 0.5L * std::log(3.14159265358979323846264338327950288L) -
         (a + 0.5L) * std::log(static_cast<long double>(n));
}

/// Scaled monic P_n[z; alpha, beta] at (z + z^-1)/2 = t.
inline long double scaled_monic_jacobi(int n, long double a, long double b, long double t, long double log_scale) {
  if (n < 0) return 0;
  return std::exp(log_monic_factor(n, a, b) + log_scale) * jacobi_classical(n, a, b, t);
}

/// Scaled E_index at z = -(X + i branch sqrt(1 - X^2))^2, X = lambda x / (2n),
/// with n = |index| >= 1.
inline std::complex<long double> scaled_jacobi_E(int index, long double a, long double b, long double lambda_x,
                                                 int branch) {
  const int n = std::abs(index);
  const long double ls = log_bessel_scale(n, a, b);
  const long double X = lambda_x / (2 * n);
  const long double t = 1 - 2 * X * X;
  long double f1 = scaled_monic_jacobi(n, a, b, t, ls);
  long double f2 = scaled_monic_jacobi(n - 1, a + 1, b + 1, t, ls);
  if (index > 0) f2 *= -static_cast<long double>(n) / (n + a + b + 1);
  return {f1, branch * 4 * X * std::sqrt(1 - X * X) * f2};
}

struct BesselLimitReport {
  LimitReport symmetric;
  // E_{-n} on the + branch and E_{+n} on the - branch, both against E_alpha(+lambda x);
  // E_{-n} on the - branch and E_{+n} on the + branch, both against E_alpha(-lambda x).
  LimitReport minus_index_plus_branch, plus_index_minus_branch, minus_index_minus_branch, plus_index_plus_branch;
  std::vector<int> ns;
  /// c(n) P_n[1]: the scaled polynomial at x = 0, which the limit sends to 1.
  std::vector<double> x0_values;

  std::vector<const LimitReport*> all() const {
    return {&symmetric, &minus_index_plus_branch, &plus_index_minus_branch, &minus_index_minus_branch,
            &plus_index_plus_branch};
  }
  bool passed() const {
    for (const LimitReport* r : all())
      if (!r->passed()) return false;
    return true;
  }
};

inline BesselLimitReport bessel_limit_check(const Rational& alpha, const Rational& beta, const Rational& lambda,
                                            double x, const std::vector<int>& n_list, double tolerance = 1e-3,
                                            Mutation mutation = Mutation::None) {
  if (!(alpha > -1 && beta > -1)) throw InvalidParameters("the Bessel limit needs alpha, beta > -1");
  if (n_list.empty()) throw ConfigError("empty n list");
  const long double a = to_long_double(alpha), b = to_long_double(beta);
  const long double lx = to_long_double(lambda) * x;
  BesselLimitReport rep;
  const int window = static_cast<int>(n_list.size()) - 1;
  auto init = [&](LimitReport& r, const std::string& name) {
    r.name = name;
    r.param_label = "1/n";
    r.tolerance = tolerance;
    r.monotone_window = window;
  };
  init(rep.symmetric, "jacobi_to_bessel");
  init(rep.minus_index_plus_branch, "jacobi_E_to_bessel_E index=-n branch=+");
  init(rep.plus_index_minus_branch, "jacobi_E_to_bessel_E index=+n branch=-");
  init(rep.minus_index_minus_branch, "jacobi_E_to_bessel_E index=-n branch=-");
  init(rep.plus_index_plus_branch, "jacobi_E_to_bessel_E index=+n branch=+");

  const long double J = bessel_value(a, lx).value;
  const std::complex<long double> Eplus = nonsym_bessel_value(a, lx, 60, mutation);
  const std::complex<long double> Eminus = nonsym_bessel_value(a, -lx, 60, mutation);
  auto rel = [](std::complex<long double> v, std::complex<long double> t) {
    long double s = std::abs(t);
    return static_cast<double>(s > 0 ? std::abs(v - t) / s : std::abs(v - t));
  };
  for (int n : n_list) {
    if (n < 1) throw ConfigError("n must be positive");
    const double inv = 1.0 / n;
    const long double ls = log_bessel_scale(n, a, b);
    const long double t = 1 - lx * lx / (2.0L * n * n);
    rep.ns.push_back(n);
    rep.x0_values.push_back(static_cast<double>(scaled_monic_jacobi(n, a, b, 1, ls)));
    record_sample(rep.symmetric, n, inv, rel(scaled_monic_jacobi(n, a, b, t, ls), J));
    record_sample(rep.minus_index_plus_branch, n, inv, rel(scaled_jacobi_E(-n, a, b, lx, 1), Eplus));
    record_sample(rep.plus_index_minus_branch, n, inv, rel(scaled_jacobi_E(n, a, b, lx, -1), Eplus));
    record_sample(rep.minus_index_minus_branch, n, inv, rel(scaled_jacobi_E(-n, a, b, lx, -1), Eminus));
    record_sample(rep.plus_index_plus_branch, n, inv, rel(scaled_jacobi_E(n, a, b, lx, 1), Eminus));
  }
  return rep;
}

/// The constant that makes the scaled polynomial equal 1 at x = 0:
/// 1 / (monic factor * P_n^{(alpha,beta)}(1)).
inline double bessel_exact_x0_constant(int n, double alpha, double beta) {
  long double a = alpha, b = beta;
  return static_cast<double>(std::exp(-log_monic_factor(n, a, b)) / jacobi_classical(n, a, b, 1));
}

}  // namespace awvec
