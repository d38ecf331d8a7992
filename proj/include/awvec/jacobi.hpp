#pragma once

// Monic Jacobi polynomials as symmetric Laurent polynomials in z, with
// x = (z + z^-1)/2, and the nonsymmetric Jacobi polynomials in vector form
//
//   f = f1 - (z - z^-1) f2.
//
// Also: the differential-reflection operator, its matrix form, the bilinear
// form and its circle-integral realization, and the limits from Askey-Wilson
// and from little q-Jacobi.

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "awvec/askey_wilson.hpp"
#include "awvec/convergence.hpp"
#include "awvec/little_q_jacobi.hpp"
#include "awvec/mutation.hpp"
#include "awvec/nonsym_aw.hpp"
#include "awvec/orthobasis.hpp"
#include "awvec/qseries.hpp"
#include "awvec/real.hpp"
#include "awvec/vector_form.hpp"

namespace awvec {

template <class T>
struct JacobiParams {
  T alpha, beta;

  JacobiParams(T a, T b) : alpha(std::move(a)), beta(std::move(b)) {}

  JacobiParams shifted() const { return JacobiParams(T(alpha + 1), T(beta + 1)); }
  /// alpha + beta + 1
  T s() const { return alpha + beta + 1; }
  bool positive_range() const { return alpha > -1 && beta > -1; }
};

enum class JacMethod { Hypergeometric, Recurrence };

namespace detail {

/// (-n)_k (n+s)_k / ((alpha+1)_k k!) for k = 0..n.
template <class T>
std::vector<T> jac_hyp_coeffs(int n, const JacobiParams<T>& p) {
  std::vector<T> c{T(1)};
  T ns = p.s() + n;
  for (int k = 1; k <= n; ++k) {
    T den = (p.alpha + k) * k;
    if (is_zero(den)) throw ParameterSingularity("(alpha+1)_k vanishes at k = " + std::to_string(k));
    T next = c.back() * (k - 1 - n) * (ns + (k - 1)) / den;
    c.push_back(next);
  }
  return c;
}

template <class T>
T jac_prefactor(int n, const JacobiParams<T>& p) {
  T den = rising(T(p.s() + n), n);
  if (is_zero(den)) throw ParameterSingularity("(n+alpha+beta+1)_n vanishes at n = " + std::to_string(n));
  return rising(T(p.alpha + 1), n) / den;
}

/// (2 - z - z^-1) / 4
template <class T>
LaurentPoly<T> jac_u() {
  LaurentPoly<T> u(T(2));
  u -= LaurentPoly<T>::monomial(1) + LaurentPoly<T>::monomial(-1);
  return u / T(4);
}

}  // namespace detail

/// Monic Jacobi polynomial on [0, 1]: (-1)^n (alpha+1)_n / (n+alpha+beta+1)_n
/// times 2F1(-n, n+alpha+beta+1; alpha+1; x).
template <class T>
OrdinaryPoly<T> jac_shift_poly(int n, const JacobiParams<T>& p) {
  if (n < 0) throw InvalidParameters("jac_shift_poly: negative degree");
  std::vector<T> c = detail::jac_hyp_coeffs(n, p);
  T pre = detail::jac_prefactor(n, p);
  if (n % 2 == 1) pre = -pre;
  OrdinaryPoly<T> out;
  for (int k = 0; k <= n; ++k) out.set(k, c[k] * pre);
  return out;
}

/// Three-term recurrence coefficients in z: P_{n+1} = (z + z^-1 - B_n) P_n - C_n P_{n-1}.
template <class T>
std::pair<T, T> jac_recurrence_coeffs(int n, const JacobiParams<T>& p) {
  const T &a = p.alpha, &b = p.beta;
  T ab = a + b;
  T B, C(0);
  if (n == 0) {
    if (is_zero(T(ab + 2))) throw ParameterSingularity("alpha + beta + 2 vanishes");
    B = 2 * (b - a) / (ab + 2);
  } else {
    T den = (ab + 2 * n) * (ab + 2 * n + 2);
    if (is_zero(den)) throw ParameterSingularity("recurrence denominator vanishes at n = " + std::to_string(n));
    B = 2 * (b - a) * (b + a) / den;
  }
  if (n == 1) {
    T den = (ab + 2) * (ab + 2) * (ab + 3);
    if (is_zero(den)) throw ParameterSingularity("recurrence denominator vanishes at n = 1");
    C = 16 * (a + 1) * (b + 1) / den;
  } else if (n > 1) {
    T m = ab + 2 * n;
    T den = m * m * (m + 1) * (m - 1);
    if (is_zero(den)) throw ParameterSingularity("recurrence denominator vanishes at n = " + std::to_string(n));
    C = 16 * T(n) * (n + a) * (n + b) * (n + ab) / den;
  }
  return {B, C};
}

template <class T>
SymLaurentPoly<T> jac_poly(int n, const JacobiParams<T>& p, JacMethod method = JacMethod::Hypergeometric) {
  if (n < 0) throw InvalidParameters("jac_poly: negative degree");
  if (method == JacMethod::Hypergeometric) {
    std::vector<T> c = detail::jac_hyp_coeffs(n, p);
    const LaurentPoly<T> u = detail::jac_u<T>();
    LaurentPoly<T> sum, power(T(1));
    for (int k = 0; k <= n; ++k) {
      sum += power * c[k];
      power = power * u;
    }
    return SymLaurentPoly<T>(sum * T(ipow(T(4), n) * detail::jac_prefactor(n, p)));
  }
  const LaurentPoly<T> w = LaurentPoly<T>::monomial(1) + LaurentPoly<T>::monomial(-1);
  LaurentPoly<T> prev, cur(T(1));
  for (int k = 0; k < n; ++k) {
    auto [B, C] = jac_recurrence_coeffs(k, p);
    LaurentPoly<T> next = (w - LaurentPoly<T>(B)) * cur - prev * C;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return SymLaurentPoly<T>(cur);
}

/// P_n[z] - (-1)^n 2^{2n} Ptilde_n((2 - z - z^-1)/4); zero when the two
/// normalizations agree.
template <class T>
LaurentPoly<T> jac_relation_residual(int n, const JacobiParams<T>& p) {
  LaurentPoly<T> rhs = compose(jac_shift_poly(n, p), detail::jac_u<T>()) * ipow(T(4), n);
  if (n % 2 == 1) rhs = -rhs;
  return jac_poly(n, p).laurent() - rhs;
}

/// 2^{4n} (alpha+1)_n (beta+1)_n n! / ((alpha+beta+2)_{2n} (n+alpha+beta+1)_n)
template <class T>
T jac_norm(int n, const JacobiParams<T>& p) {
  T den = rising(T(p.s() + 1), 2 * n) * rising(T(p.s() + n), n);
  if (is_zero(den)) throw ParameterSingularity("Jacobi norm denominator vanishes at n = " + std::to_string(n));
  return ipow(T(16), n) * rising(T(p.alpha + 1), n) * rising(T(p.beta + 1), n) * factorial<T>(n) / den;
}

// ---------------------------------------------------------------------------

/// n / (n + alpha + beta + 1)
template <class T>
T jac_E_ratio(int n, const JacobiParams<T>& p) {
  T den = p.s() + n;
  if (is_zero(den)) throw ParameterSingularity("n + alpha + beta + 1 vanishes at n = " + std::to_string(n));
  return T(n) / den;
}

template <class T>
VecSymPair<T> jac_E_vec(int n, const JacobiParams<T>& p) {
  if (n == 0) return {SymLaurentPoly<T>(T(1)), SymLaurentPoly<T>()};
  const int m = std::abs(n);
  SymLaurentPoly<T> P = jac_poly(m, p);
  SymLaurentPoly<T> Ps = jac_poly(m - 1, p.shifted());
  if (n < 0) return {P, Ps};
  return {P, T(-jac_E_ratio(m, p)) * Ps};
}

template <class T>
LaurentPoly<T> jac_E_laurent(int n, const JacobiParams<T>& p) {
  if (n == 0) return LaurentPoly<T>(T(1));
  const int m = std::abs(n);
  const LaurentPoly<T> unit = LaurentPoly<T>::monomial(1) - LaurentPoly<T>::monomial(-1);
  LaurentPoly<T> P = jac_poly(m, p).laurent();
  LaurentPoly<T> Ps = jac_poly(m - 1, p.shifted()).laurent();
  if (n < 0) return P - unit * Ps;
  return P + unit * Ps * jac_E_ratio(m, p);
}

/// -n for n < 0, -(n + alpha + beta + 1) for n >= 0.
template <class T>
T jac_E_eigenvalue(int n, const JacobiParams<T>& p) {
  if (n < 0) return T(-n);
  return -(p.s() + n);
}

/// -z f' + (alpha+beta+1 + (alpha-beta) z)/(1 - z^2) (f - f[1/z]) - (alpha+beta+1) f
template <class T>
LaurentPoly<T> jac_Y_apply(const LaurentPoly<T>& f, const JacobiParams<T>& p, Mutation mutation = Mutation::None) {
  T diff = p.alpha - p.beta;
  if (mutation == Mutation::JacobiAlphaBetaSign) diff = -diff;
  LaurentPoly<T> coef = LaurentPoly<T>(p.s()) + LaurentPoly<T>::monomial(1, diff);
  LaurentPoly<T> den = LaurentPoly<T>(T(1)) - LaurentPoly<T>::monomial(2);
  LaurentPoly<T> frac = exact_divide(coef * (f - f.reflect()), den);
  return frac - LaurentPoly<T>::monomial(1) * f.derivative() - f * p.s();
}

/// The 2x2 form: [[-(alpha+beta+1), (z^2-1) d/dz + (alpha+beta+2)(z+z^-1) + 2(alpha-beta)],
///                [(1 - z^-2)^-1 d/dz, 0]].
template <class T>
VecSymPair<T> jac_Y_matrix_apply(const VecSymPair<T>& v, const JacobiParams<T>& p,
                                 Mutation mutation = Mutation::None) {
  using L = LaurentPoly<T>;
  T diff = p.alpha - p.beta;
  if (mutation == Mutation::JacobiAlphaBetaSign) diff = -diff;
  const L& f1 = v.f1.laurent();
  const L& f2 = v.f2.laurent();
  L z2m1 = L::monomial(2) - L(T(1));
  L w = L::monomial(1) + L::monomial(-1);
  L g1 = f1 * T(-p.s()) + z2m1 * f2.derivative() + w * f2 * T(p.s() + 1) + f2 * T(2 * diff);
  L g2 = exact_divide(L::monomial(2) * f1.derivative(), z2m1);
  return {SymLaurentPoly<T>(g1), SymLaurentPoly<T>(g2)};
}

enum class JacRoute { Scalar, Matrix };

template <class T>
std::vector<LaurentPoly<T>> jac_eigen_residual(int n, const JacobiParams<T>& p, JacRoute route,
                                               Mutation mutation = Mutation::None) {
  T lambda = jac_E_eigenvalue(n, p);
  if (route == JacRoute::Scalar) {
    LaurentPoly<T> E = jac_E_laurent(n, p);
    return {jac_Y_apply(E, p, mutation) - E * lambda};
  }
  VecSymPair<T> v = jac_E_vec(n, p);
  VecSymPair<T> image = jac_Y_matrix_apply(v, p, mutation);
  return {image.f1.laurent() - v.f1.laurent() * lambda, image.f2.laurent() - v.f2.laurent() * lambda};
}

/// The off-diagonal entries of the matrix operator act as a lowering/raising
/// pair: lower(P_n) = lowering * P'_{n-1}, raise(P'_{n-1}) = raising * P_n,
/// with P' carrying parameters (alpha+1, beta+1).
template <class T>
struct ShiftEntry {
  int n = 0;
  T lowering;
  T raising;
  bool lowering_exact = false;
  bool raising_exact = false;
};

template <class T>
std::vector<ShiftEntry<T>> jac_shift_table(int N, const JacobiParams<T>& p) {
  using L = LaurentPoly<T>;
  std::vector<ShiftEntry<T>> table;
  for (int n = 1; n <= N; ++n) {
    SymLaurentPoly<T> P = jac_poly(n, p);
    SymLaurentPoly<T> Ps = jac_poly(n - 1, p.shifted());
    ShiftEntry<T> e;
    e.n = n;
    // Lower-left alone: f2 = 0 in, first component of the image discarded.
    L lower = jac_Y_matrix_apply(VecSymPair<T>{P, SymLaurentPoly<T>()}, p).f2.laurent();
    e.lowering = lower.coeff(n - 1);
    e.lowering_exact = lower == Ps.laurent() * e.lowering;
    L raise = jac_Y_matrix_apply(VecSymPair<T>{SymLaurentPoly<T>(), Ps}, p).f1.laurent();
    e.raising = raise.coeff(n);
    e.raising_exact = raise == P.laurent() * e.raising;
    table.push_back(std::move(e));
  }
  return table;
}

// ---------------------------------------------------------------------------

template <class T>
using JacBasis = MonicBasis<SymLaurentPoly<T>, T>;

template <class T>
JacBasis<T> make_jac_basis(const JacobiParams<T>& p, int N) {
  std::vector<SymLaurentPoly<T>> polys;
  std::vector<T> norms;
  for (int n = 0; n <= N; ++n) {
    polys.push_back(jac_poly(n, p));
    norms.push_back(jac_norm(n, p));
  }
  return JacBasis<T>(std::move(polys), std::move(norms));
}

/// 16 (alpha+1)(beta+1) / ((alpha+beta+2)(alpha+beta+3))
template <class T>
T jac_bilinear_constant(const JacobiParams<T>& p) {
  T den = (p.s() + 1) * (p.s() + 2);
  if (is_zero(den)) throw ParameterSingularity("(alpha+beta+2)(alpha+beta+3) vanishes");
  return 16 * (p.alpha + 1) * (p.beta + 1) / den;
}

template <class T>
class JacobiBilinear {
 public:
  JacobiBilinear(const JacobiParams<T>& p, int depth)
      : K_(jac_bilinear_constant(p)), base_(make_jac_basis(p, depth)), shifted_(make_jac_basis(p.shifted(), depth)) {}

  const T& K() const { return K_; }
  T operator()(const VecSymPair<T>& g, const VecSymPair<T>& h) const {
    return base_.inner(g.f1, h.f1) + K_ * shifted_.inner(g.f2, h.f2);
  }
  T operator()(const LaurentPoly<T>& g, const LaurentPoly<T>& h) const {
    return (*this)(jacobi_split(g), jacobi_split(h));
  }

 private:
  T K_;
  JacBasis<T> base_;
  JacBasis<T> shifted_;
};

template <class T>
T jac_bilinear(const LaurentPoly<T>& g, const LaurentPoly<T>& h, const JacobiParams<T>& p) {
  int depth = 0;
  for (const LaurentPoly<T>* f : {&g, &h})
    if (!f->is_zero()) depth = std::max({depth, f->max_degree(), -f->min_degree()});
  return JacobiBilinear<T>(p, depth)(g, h);
}

template <class T>
GramReport<T> jac_gram_report(int M, const JacobiParams<T>& p) {
  JacobiBilinear<T> form(p, M);
  return gram_from<T>(M, [&](int n) { return jac_E_vec(n, p); }, form);
}

// ---------------------------------------------------------------------------
// Numerical realizations of the bilinear form.

/// f at z = -(x + i sign sqrt(1 - x^2))^2 from the components:
/// f1(1 - 2x^2) + sign 4 i x sqrt(1 - x^2) f2(1 - 2x^2).
template <class T>
std::complex<double> branch_eval(const VecSymPair<T>& v, double x, int sign) {
  OrdinaryPoly<T> g1 = to_x(v.f1), g2 = to_x(v.f2);
  const double y = 1 - 2 * x * x;
  auto ev = [y](const OrdinaryPoly<T>& g) {
    double acc = 0;
    for (int k = g.degree(); k >= 0; --k) acc = acc * y + to_double(g.coeff(k));
    return acc;
  };
  const double r = std::sqrt(std::max(0.0, 1 - x * x));
  return {ev(g1), sign * 4 * x * r * ev(g2)};
}

/// |direct complex evaluation - branch_eval| at the point above.
template <class T>
double branch_eval_residual(const VecSymPair<T>& v, double x, int sign) {
  std::complex<double> w(x, sign * std::sqrt(std::max(0.0, 1 - x * x)));
  std::complex<double> direct = eval_complex(jacobi_join(v), -(w * w));
  return std::abs(direct - branch_eval(v, x, sign));
}

/// Ratio (circle integral) / (bilinear form) predicted by the Gamma factors:
/// 2^{2alpha+2beta+3} Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+2).
inline double jac_circle_constant(double alpha, double beta) {
  return std::exp2(2 * alpha + 2 * beta + 3) * std::exp(std::lgamma(alpha + 1) + std::lgamma(beta + 1) -
                                                        std::lgamma(alpha + beta + 2));
}

/// The same ratio with the 2^{2alpha+2beta+4} power of two.
inline double jac_circle_constant_printed(double alpha, double beta) { return 2 * jac_circle_constant(alpha, beta); }

namespace detail {

/// theta nodes for the periodic trapezoid on [-pi, pi); shifted by half a step
/// when the weight is singular at theta = 0 or pi.
inline std::vector<double> circle_nodes(int N, bool shift) {
  const double pi = boost::math::constants::pi<double>();
  std::vector<double> th(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) th[static_cast<std::size_t>(j)] = -pi + 2 * pi * (j + (shift ? 0.5 : 0.0)) / N;
  return th;
}

}  // namespace detail

/// Trapezoid approximation of
///   int_{-pi}^{pi} E_m[e^{i t}] conj(E_n[e^{i t}]) |(1-e^{it})^{alpha+1/2} (1+e^{it})^{beta+1/2}|^2 dt.
inline std::complex<double> circle_integral(int m, int n, const JacobiParams<Rational>& p, int quad_points) {
  if (quad_points < 2) throw InvalidParameters("quad_points must be at least 2");
  const double al = to_double(p.alpha), be = to_double(p.beta);
  const bool shift = al + 0.5 < 0 || be + 0.5 < 0;
  LaurentPoly<Rational> Em = jac_E_laurent(m, p), En = jac_E_laurent(n, p);
  std::complex<double> total = 0;
  for (double t : detail::circle_nodes(quad_points, shift)) {
    std::complex<double> z = std::polar(1.0, t);
    double w = std::pow(std::abs(1.0 - z), 2 * al + 1) * std::pow(std::abs(1.0 + z), 2 * be + 1);
    total += eval_complex(Em, z) * std::conj(eval_complex(En, z)) * w;
  }
  return total * (2 * boost::math::constants::pi<double>() / quad_points);
}

/// int_{-1}^{1} E_m E_n-bar |x|^{2alpha+1} (1-x^2)^beta dx on the + branch,
/// evaluated through the components with x = cos(phi), phi in [0, pi).
inline std::complex<double> interval_integral(int m, int n, const JacobiParams<Rational>& p, int quad_points) {
  if (quad_points < 2) throw InvalidParameters("quad_points must be at least 2");
  const double pi = boost::math::constants::pi<double>();
  const double al = to_double(p.alpha), be = to_double(p.beta);
  const bool shift = al + 0.5 < 0 || be + 0.5 < 0;
  VecSymPair<Rational> vm = jac_E_vec(m, p), vn = jac_E_vec(n, p);
  std::complex<double> total = 0;
  for (int j = 0; j < quad_points; ++j) {
    double phi = pi * (j + (shift ? 0.5 : 0.0)) / quad_points;
    double x = std::cos(phi), s = std::sin(phi);
    double w = std::pow(std::abs(x), 2 * al + 1) * std::pow(s, 2 * be + 1);
    total += branch_eval(vm, x, 1) * std::conj(branch_eval(vn, x, 1)) * w;
  }
  return total * (pi / quad_points);
}

struct CircleResult {
  int m = 0, n = 0, quad_points = 0;
  std::complex<double> integral;
  /// m != n: |I(m,n)| / sqrt(I(m,m) I(n,n)).
  /// m == n: |I(m,m) / (c <E_m,E_m>) - 1| with c = jac_circle_constant.
  double residual = 0;
  double coarse_residual = 0;  // same quantity at quad_points / 2
  double fitted_constant = 0;  // I(m,m) / <E_m,E_m>, m == n only
};

/// Throws QuadratureNonConvergence when halving the number of nodes gives a
/// residual no larger than the requested one and both sit above 1e-12.
inline CircleResult circle_orthogonality(int m, int n, const JacobiParams<Rational>& p, int quad_points) {
  if (!p.positive_range()) throw InvalidParameters("circle integral needs alpha, beta > -1");
  CircleResult r;
  r.m = m;
  r.n = n;
  r.quad_points = quad_points;
  auto residual_at = [&](int N, std::complex<double>* I, double* fitted) {
    std::complex<double> v = circle_integral(m, n, p, N);
    if (I) *I = v;
    if (m != n) {
      double mm = circle_integral(m, m, p, N).real(), nn = circle_integral(n, n, p, N).real();
      return std::abs(v) / std::sqrt(mm * nn);
    }
    LaurentPoly<Rational> E = jac_E_laurent(m, p);
    double exact = to_double(jac_bilinear(E, E, p));
    double f = v.real() / exact;
    if (fitted) *fitted = f;
    return std::abs(f / jac_circle_constant(to_double(p.alpha), to_double(p.beta)) - 1);
  };
  r.residual = residual_at(quad_points, &r.integral, &r.fitted_constant);
  r.coarse_residual = residual_at(std::max(2, quad_points / 2), nullptr, nullptr);
  if (!std::isfinite(r.residual)) throw QuadratureNonConvergence("non-finite circle integral");
  if (r.residual >= r.coarse_residual && r.residual > 1e-12)
    throw QuadratureNonConvergence("doubling the nodes from " + std::to_string(quad_points / 2) + " to " +
                                   std::to_string(quad_points) + " did not reduce the residual");
  return r;
}

// ---------------------------------------------------------------------------
// Limits q -> 1 into the Jacobi family.

enum class JacobiLimitKind { FromAW, FromAWNonsym, FromLQJ };

namespace detail {

/// (q^{alpha+1/2}, -q^{beta+1/2}, q^{1/2}, -q^{1/2})
inline AWParams<Real> jac_limit_params(const Real& q, const Real& alpha, const Real& beta) {
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  Real s = sqrt(q);
  return AWParams<Real>(q, Real(pow(q, Real(alpha + Real(0.5)))), Real(-pow(q, Real(beta + Real(0.5)))), s, Real(-s), 8);
}

/// f[e^{i theta}] as (real, imaginary) parts.
inline std::pair<Real, Real> eval_on_circle(const LaurentPoly<Real>& f, const Real& theta) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  Real re(0), im(0);
  for (const auto& [k, c] : f.coeffs()) {
    Real a = theta * k;
    re += c * cos(a);
    im += c * sin(a);
  }
  return {re, im};
}

inline Real complex_abs(const std::pair<Real, Real>& v) {
  using boost::multiprecision::sqrt;
  return sqrt(v.first * v.first + v.second * v.second);
}

/// Accumulates max |value - target| and max |target| over sample points.
struct SupGap {
  Real diff{0}, scale{0};
  void add(const Real& value, const Real& target) {
    using boost::multiprecision::abs;
    diff = std::max(diff, Real(abs(value - target)));
    scale = std::max(scale, Real(abs(target)));
  }
  void add(const std::pair<Real, Real>& value, const std::pair<Real, Real>& target) {
    diff = std::max(diff, complex_abs({value.first - target.first, value.second - target.second}));
    scale = std::max(scale, complex_abs(target));
  }
  double relative() const { return to_double(scale > 0 ? Real(diff / scale) : diff); }
};

}  // namespace detail

/// Sweeps q = 1 - 2^-k, k = 1..steps. The error at each step is the largest
/// deviation over the sample points divided by the largest |target| there, so
/// a sample point near a zero of the target does not dominate. FromAW and FromAWNonsym compare at z = 2 and at z = e^{i}; FromLQJ compares
/// on the grid {1/4, 1/2, 3/4}.
inline LimitReport jac_limit_check(JacobiLimitKind kind, int n, const JacobiParams<Rational>& p, int steps,
                                   double tolerance = 1e-4, int window = 0) {
  if (steps < 1) throw ConfigError("steps must be positive");
  using boost::multiprecision::pow;
  LimitReport r;
  const std::string tag = std::to_string(n);
  switch (kind) {
    case JacobiLimitKind::FromAW: r.name = "aw_to_jacobi_poly n=" + tag; break;
    case JacobiLimitKind::FromAWNonsym: r.name = "aw_to_jacobi_E n=" + tag; break;
    case JacobiLimitKind::FromLQJ: r.name = "lqj_to_jacobi_poly n=" + tag; break;
  }
  if (kind != JacobiLimitKind::FromAWNonsym && n < 0) throw InvalidParameters("polynomial limit needs n >= 0");
  r.param_label = "1-q";
  r.tolerance = tolerance;
  r.monotone_window = window > 0 ? window : steps - 1;
  const Real alpha = from_rational<Real>(p.alpha), beta = from_rational<Real>(p.beta);
  const Real z_off(2), theta(1);

  LaurentPoly<Real> target_laurent;
  OrdinaryPoly<Real> target_shift;
  std::vector<Real> xs;
  if (kind == JacobiLimitKind::FromLQJ) {
    OrdinaryPoly<Rational> t = jac_shift_poly(n, p);
    for (const auto& [k, c] : t.coeffs()) target_shift.set(k, from_rational<Real>(c));
    for (const char* x : {"1/4", "1/2", "3/4"}) xs.push_back(from_rational<Real>(parse_rational(x)));
  } else {
    LaurentPoly<Rational> t = kind == JacobiLimitKind::FromAW ? jac_poly(n, p).laurent() : jac_E_laurent(n, p);
    for (const auto& [k, c] : t.coeffs()) target_laurent.set(k, from_rational<Real>(c));
  }

  Real h(1);
  for (int k = 1; k <= steps; ++k) {
    h /= 2;
    const Real q = 1 - h;
    detail::SupGap gap;
    if (kind == JacobiLimitKind::FromLQJ) {
      OrdinaryPoly<Real> P = lqj_poly(n, q, Real(pow(q, alpha)), Real(pow(q, beta)));
      for (const Real& x : xs) gap.add(P.eval(x), target_shift.eval(x));
    } else {
      AWParams<Real> aw = detail::jac_limit_params(q, alpha, beta);
      LaurentPoly<Real> f = kind == JacobiLimitKind::FromAW ? aw_poly(n, aw).laurent() : E_laurent(n, aw);
      gap.add(f.eval(z_off), target_laurent.eval(z_off));
      gap.add(detail::eval_on_circle(f, theta), detail::eval_on_circle(target_laurent, theta));
    }
    record_sample(r, k, to_double(h), gap.relative());
  }
  return r;
}

}  // namespace awvec
