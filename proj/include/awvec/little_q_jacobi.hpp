#pragma once

// Monic little q-Jacobi polynomials P_n(x; a, b; q), their vector-valued
// nonsymmetric counterparts, and the limit from Askey-Wilson.

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "awvec/askey_wilson.hpp"
#include "awvec/convergence.hpp"
#include "awvec/nonsym_aw.hpp"
#include "awvec/orthobasis.hpp"
#include "awvec/qseries.hpp"
#include "awvec/real.hpp"

namespace awvec {

namespace detail {

template <class T>
std::optional<T> square_root(const T& v) {
  if constexpr (is_exact_v<T>) {
    return rational_sqrt(v);
  } else {
    using std::sqrt;
    if (v < 0) return std::nullopt;
    return T(sqrt(v));
  }
}

}  // namespace detail

/// (q, a, b) with 0 < q < 1. Positivity needs 0 < a, b < 1/q; that range is
/// reported by positive_range() rather than enforced.
template <class T>
struct LQJParams {
  T q, a, b;
  std::optional<T> sqrt_q;

  LQJParams(T q_, T a_, T b_) : q(std::move(q_)), a(std::move(a_)), b(std::move(b_)) {
    if (!(q > 0 && q < 1)) throw InvalidParameters("q must lie in (0, 1)");
    sqrt_q = detail::square_root(q);
  }

  LQJParams shifted() const { return LQJParams(q, T(q * a), T(q * b)); }
  bool positive_range() const { return a > 0 && b > 0 && a * q < 1 && b * q < 1; }

  const T& root() const {
    if (!sqrt_q) throw IrrationalScaleFactor("q^(1/2) is irrational for q = " + to_string_any(q));
    return *sqrt_q;
  }

 private:
  static std::string to_string_any(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
};

/// Terminating 2phi1 with numerator parameter q^-n, normalized to be monic.
template <class T>
OrdinaryPoly<T> lqj_poly(int n, const T& q, const T& a, const T& b) {
  if (n < 0) throw InvalidParameters("lqj_poly: negative degree");
  T top = a * b * ipow(q, n + 1);
  T qn_inv = ipow(q, -n);
  OrdinaryPoly<T> sum;
  T coef(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      T j = ipow(q, k - 1);
      T den = (1 - a * q * j) * (1 - q * j);
      if (is_zero(den)) throw ParameterSingularity("(aq;q)_k vanishes in the 2phi1 denominator");
      coef *= (1 - qn_inv * j) * (1 - top * j) * q / den;
    }
    sum.set(k, coef);
  }
  T pre_den = q_pochhammer(top, q, n);
  if (is_zero(pre_den)) throw ParameterSingularity("(abq^{n+1}; q)_n vanishes");
  T pre = ipow(q, static_cast<long>(n) * (n - 1) / 2) * q_pochhammer(T(a * q), q, n) / pre_den;
  if (n % 2 == 1) pre = -pre;
  return sum * pre;
}

template <class T>
OrdinaryPoly<T> lqj_poly(int n, const LQJParams<T>& p) {
  return lqj_poly(n, p.q, p.a, p.b);
}

/// A(x)(f(qx) - f(x)) + B(x)(f(x/q) - f(x)), A = (abqx - a)/x, B = (x - 1)/x.
template <class T>
OrdinaryPoly<T> lqj_L_apply(const OrdinaryPoly<T>& f, const T& q, const T& a, const T& b) {
  using O = OrdinaryPoly<T>;
  O A = O::monomial(1, T(a * b * q)) - O(a);
  O B = O::monomial(1) - O(T(1));
  O num = A * (f.dilate(q) - f) + B * (f.dilate(T(1) / q) - f);
  return num.divide_by_x();
}

template <class T>
OrdinaryPoly<T> lqj_L_apply(const OrdinaryPoly<T>& f, const LQJParams<T>& p) {
  return lqj_L_apply(f, p.q, p.a, p.b);
}

/// (q^-n - 1)(1 - ab q^{n+1}).
template <class T>
T lqj_eigenvalue(int n, const T& q, const T& a, const T& b) {
  return (ipow(q, -n) - 1) * (1 - a * b * ipow(q, n + 1));
}

/// q^{n^2} a^n (q, aq, bq; q)_n / ((abq^2; q)_{2n} (abq^{n+1}; q)_n).
template <class T>
T lqj_norm(int n, const T& q, const T& a, const T& b) {
  T num = ipow(q, static_cast<long>(n) * n) * ipow(a, n) * q_pochhammer(q, q, n) * q_pochhammer(T(a * q), q, n) *
          q_pochhammer(T(b * q), q, n);
  T den = q_pochhammer(T(a * b * q * q), q, 2 * n) * q_pochhammer(T(a * b * ipow(q, n + 1)), q, n);
  if (is_zero(den)) throw ParameterSingularity("little q-Jacobi norm denominator vanishes");
  return num / den;
}

template <class T>
T lqj_norm(int n, const LQJParams<T>& p) {
  return lqj_norm(n, p.q, p.a, p.b);
}

template <class T>
using LQJBasis = MonicBasis<OrdinaryPoly<T>, T>;

template <class T>
LQJBasis<T> make_lqj_basis(const T& q, const T& a, const T& b, int N) {
  std::vector<OrdinaryPoly<T>> polys;
  std::vector<T> norms;
  for (int n = 0; n <= N; ++n) {
    polys.push_back(lqj_poly(n, q, a, b));
    norms.push_back(lqj_norm(n, q, a, b));
  }
  return LQJBasis<T>(std::move(polys), std::move(norms));
}

template <class T>
T lqj_inner(const OrdinaryPoly<T>& f, const OrdinaryPoly<T>& g, const LQJParams<T>& p) {
  int depth = std::max({f.degree(), g.degree(), 0});
  return make_lqj_basis(p.q, p.a, p.b, depth).inner(f, g);
}

// ---------------------------------------------------------------------------

template <class T>
struct OrdPair {
  OrdinaryPoly<T> f1;
  OrdinaryPoly<T> f2;
  friend bool operator==(const OrdPair& u, const OrdPair& v) { return u.f1 == v.f1 && u.f2 == v.f2; }
  friend bool operator!=(const OrdPair& u, const OrdPair& v) { return !(u == v); }
  friend OrdPair operator-(const OrdPair& u, const OrdPair& v) { return {u.f1 - v.f1, u.f2 - v.f2}; }
  friend OrdPair operator*(const T& s, const OrdPair& u) { return {u.f1 * s, u.f2 * s}; }
  bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
};

/// E_{-n} = (P_n, q^{-3/2} a^-1 b^-1 P'_{n-1}),
/// E_n = (P_n, -q^{n-1/2}(1 - q^n)/(1 - q^{n+1}ab) P'_{n-1}), E_0 = (1, 0),
/// where P' has parameters (qa, qb).
template <class T>
OrdPair<T> lqj_E_vec(int n, const LQJParams<T>& p) {
  if (n == 0) return {OrdinaryPoly<T>(T(1)), OrdinaryPoly<T>()};
  const T& s = p.root();
  const int m = std::abs(n);
  OrdinaryPoly<T> P = lqj_poly(m, p.q, p.a, p.b);
  OrdinaryPoly<T> Ps = lqj_poly(m - 1, p.q, T(p.q * p.a), T(p.q * p.b));
  if (n < 0) return {P, Ps * T(1 / (s * p.q * p.a * p.b))};
  T den = 1 - ipow(p.q, m + 1) * p.a * p.b;
  if (is_zero(den)) throw ParameterSingularity("1 - q^{n+1} ab vanishes");
  T k = -ipow(p.q, m - 1) * s * (1 - ipow(p.q, m)) / den;
  return {P, Ps * k};
}

/// q^n for n < 0, q^{n+1} ab for n >= 0.
template <class T>
T lqj_E_eigenvalue(int n, const LQJParams<T>& p) {
  if (n < 0) return ipow(p.q, n);
  return ipow(p.q, n + 1) * p.a * p.b;
}

/// The 2x2 operator: Y11 = qab, Y22 = q^-1 - q(1-q)ab + q^-1 L_{aq,bq},
/// Y21 g = (g(x) - g(qx)) / (q^{1/2} x),
/// Y12 g = a^2 b q^{3/2} (1 - bqx) g(x) - ab q^{1/2} (1 - x) g(x/q).
template <class T>
OrdPair<T> lqj_Y_apply(const OrdPair<T>& v, const LQJParams<T>& p) {
  using O = OrdinaryPoly<T>;
  const T &q = p.q, &a = p.a, &b = p.b;
  const T& s = p.root();
  O y11 = v.f1 * T(q * a * b);
  O y12 = (O(T(1)) - O::monomial(1, T(b * q))) * v.f2 * T(a * a * b * q * s) -
          (O(T(1)) - O::monomial(1)) * v.f2.dilate(T(1) / q) * T(a * b * s);
  O y21 = (v.f1 - v.f1.dilate(q)).divide_by_x() * T(1 / s);
  O y22 = v.f2 * T(1 / q - q * (1 - q) * a * b) + lqj_L_apply(v.f2, q, T(q * a), T(q * b)) * T(1 / q);
  return {y11 + y12, y21 + y22};
}

/// (Y - lambda) E_n for the pair form.
template <class T>
OrdPair<T> lqj_eigen_residual(int n, const LQJParams<T>& p) {
  OrdPair<T> v = lqj_E_vec(n, p);
  return lqj_Y_apply(v, p) - lqj_E_eigenvalue(n, p) * v;
}

/// q^2 a^2 b (1-qa)(1-qb) / ((1-q^2 ab)(1-q^3 ab)).
template <class T>
T lqj_bilinear_constant(const LQJParams<T>& p) {
  const T &q = p.q, &a = p.a, &b = p.b;
  T ab = a * b;
  return q * q * a * ab * (1 - q * a) * (1 - q * b) / ((1 - q * q * ab) * (1 - q * q * q * ab));
}

template <class T>
class LQJBilinear {
 public:
  LQJBilinear(const LQJParams<T>& p, int depth)
      : K_(lqj_bilinear_constant(p)),
        base_(make_lqj_basis(p.q, p.a, p.b, depth)),
        shifted_(make_lqj_basis(p.q, T(p.q * p.a), T(p.q * p.b), depth)) {}
  const T& K() const { return K_; }
  T operator()(const OrdPair<T>& g, const OrdPair<T>& h) const {
    return base_.inner(g.f1, h.f1) + K_ * shifted_.inner(g.f2, h.f2);
  }

 private:
  T K_;
  LQJBasis<T> base_;
  LQJBasis<T> shifted_;
};

template <class T>
T lqj_bilinear(const OrdPair<T>& g, const OrdPair<T>& h, const LQJParams<T>& p) {
  int depth = std::max({g.f1.degree(), g.f2.degree(), h.f1.degree(), h.f2.degree(), 0});
  return LQJBilinear<T>(p, depth)(g, h);
}

template <class T>
GramReport<T> lqj_gram_report(int M, const LQJParams<T>& p) {
  LQJBilinear<T> form(p, M);
  return gram_from<T>(M, [&](int n) { return lqj_E_vec(n, p); }, form);
}

// ---------------------------------------------------------------------------
// Limit from Askey-Wilson: parameters (-q^{1/2} a, q b lambda, -q^{1/2}, 1/lambda),
// argument z = x / lambda, rescaled by lambda^n.

enum class LQJLimitForm { Polynomial, VectorE };

namespace detail {

inline AWParams<Real> lqj_limit_params(const Real& q, const Real& s, const Real& a, const Real& b, const Real& lam) {
  return AWParams<Real>(q, Real(-s * a), Real(q * b * lam), Real(-s), Real(1 / lam), 8);
}

inline double relative_gap(const Real& value, const Real& target) {
  using boost::multiprecision::abs;
  Real diff = abs(value - target);
  Real scale = abs(target);
  return to_double(scale > 0 ? Real(diff / scale) : diff);
}

}  // namespace detail

/// Sweeps lambda = 2^-k, k = 1..steps, and records the largest relative error
/// over the x grid (and over both components for the vector form).
inline LimitReport lqj_limit_check(int n, const LQJParams<Rational>& p, int steps, const std::vector<Rational>& grid,
                                   LQJLimitForm form = LQJLimitForm::Polynomial, double tolerance = 1e-6,
                                   int window = 10) {
  if (steps < 1) throw ConfigError("steps must be positive");
  using boost::multiprecision::sqrt;
  LimitReport r;
  r.name = form == LQJLimitForm::Polynomial ? "aw_to_lqj_poly n=" + std::to_string(n)
                                             : "aw_to_lqj_vector n=" + std::to_string(n);
  r.param_label = "lambda";
  r.tolerance = tolerance;
  r.monotone_window = window;
  const Real q = from_rational<Real>(p.q), a = from_rational<Real>(p.a), b = from_rational<Real>(p.b);
  const Real s = sqrt(q);
  const int m = std::abs(n);
  LQJParams<Real> pr(q, a, b);
  std::vector<Real> xs;
  for (const Rational& x : grid) xs.push_back(from_rational<Real>(x));

  std::vector<Real> targets1, targets2;
  if (form == LQJLimitForm::Polynomial) {
    if (n < 0) throw InvalidParameters("polynomial limit needs n >= 0");
    OrdinaryPoly<Rational> target = lqj_poly(n, p);
    for (const Rational& x : grid) targets1.push_back(from_rational<Real>(target.eval(x)));
  } else {
    OrdPair<Real> target = lqj_E_vec(n, pr);
    for (const Real& x : xs) {
      targets1.push_back(target.f1.eval(x));
      targets2.push_back(target.f2.eval(x));
    }
  }

  Real lam(1);
  for (int k = 1; k <= steps; ++k) {
    lam /= 2;
    AWParams<Real> aw = detail::lqj_limit_params(q, s, a, b, lam);
    Real scale = ipow(lam, m);
    double err = 0;
    if (form == LQJLimitForm::Polynomial) {
      LaurentPoly<Real> P = aw_poly(n, aw).laurent();
      for (std::size_t i = 0; i < xs.size(); ++i)
        err = std::max(err, detail::relative_gap(Real(scale * P.eval(Real(xs[i] / lam))), targets1[i]));
    } else {
      VecSymPair<Real> v = E_vec(n, aw);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        Real zz = xs[i] / lam;
        err = std::max(err, detail::relative_gap(Real(scale * v.f1.laurent().eval(zz)), targets1[i]));
        err = std::max(err, detail::relative_gap(Real(scale * v.f2.laurent().eval(zz)), targets2[i]));
      }
    }
    record_sample(r, k, to_double(lam), err);
  }
  return r;
}

struct DegeneracyReport {
  int n = 0;
  std::vector<double> lambdas;
  std::vector<double> normalized_dets;  // |det| / (row norm product), tends to 0
};

/// In Laurent form, lambda^n E_{-n}[x/lambda] and lambda^{n-1} E_{n-1}[x/lambda]
/// tend to proportional polynomials. Tracks the normalized 2x2 determinant of
/// their values at two grid points.
inline DegeneracyReport lqj_laurent_degeneracy(int n, const LQJParams<Rational>& p, int steps, const Rational& x1,
                                               const Rational& x2) {
  using boost::multiprecision::abs;
  using boost::multiprecision::sqrt;
  if (n < 1) throw InvalidParameters("degeneracy check needs n >= 1");
  DegeneracyReport r;
  r.n = n;
  const Real q = from_rational<Real>(p.q), a = from_rational<Real>(p.a), b = from_rational<Real>(p.b);
  const Real s = sqrt(q);
  const Real X1 = from_rational<Real>(x1), X2 = from_rational<Real>(x2);
  Real lam(1);
  for (int k = 1; k <= steps; ++k) {
    lam /= 2;
    AWParams<Real> aw = detail::lqj_limit_params(q, s, a, b, lam);
    LaurentPoly<Real> Eneg = E_laurent(-n, aw), Eprev = E_laurent(n - 1, aw);
    Real sn = ipow(lam, n), sp = ipow(lam, n - 1);
    Real u1 = sn * Eneg.eval(Real(X1 / lam)), u2 = sn * Eneg.eval(Real(X2 / lam));
    Real v1 = sp * Eprev.eval(Real(X1 / lam)), v2 = sp * Eprev.eval(Real(X2 / lam));
    Real det = abs(u1 * v2 - u2 * v1);
    Real norm = sqrt(u1 * u1 + u2 * u2) * sqrt(v1 * v1 + v2 * v2);
    r.lambdas.push_back(to_double(lam));
    r.normalized_dets.push_back(to_double(norm > 0 ? Real(det / norm) : det));
  }
  return r;
}

}  // namespace awvec
