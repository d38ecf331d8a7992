#pragma once

// Monic symmetric Askey-Wilson polynomials P_n[z; a,b,c,d | q].

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "awvec/errors.hpp"
#include "awvec/laurent.hpp"
#include "awvec/orthobasis.hpp"
#include "awvec/qseries.hpp"

namespace awvec {

/// Validated parameter pack (q, a, b, c, d).
///
/// Enforces 0 < q < 1, nonzero a..d, {a,b} disjoint from {1/a,1/b}, and
/// abcd != q^-m for m = 0..guard. Exact arithmetic cannot test every m, so
/// the guard bound is part of the contract.
template <class T>
struct AWParams {
  T q, a, b, c, d;
  T e1, e2, e3, e4;
  int guard = 64;

  AWParams(T q_, T a_, T b_, T c_, T d_, int guard_ = 64)
      : q(std::move(q_)), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), guard(guard_) {
    if (!(q > 0 && q < 1)) throw InvalidParameters("q must lie in (0, 1)");
    if (is_zero(a) || is_zero(b) || is_zero(c) || is_zero(d))
      throw DegenerateParameters("a, b, c, d must be nonzero");
    if (a * a == 1 || b * b == 1 || a * b == 1)
      throw DegenerateParameters("{a,b} must be disjoint from {1/a,1/b}");
    e1 = a + b + c + d;
    e2 = a * b + a * c + b * c + a * d + b * d + c * d;
    e3 = a * b * c + a * b * d + a * c * d + b * c * d;
    e4 = a * b * c * d;
    T qm(1);
    for (int m = 0; m <= guard; ++m) {
      if (e4 * qm == 1) throw DegenerateParameters("abcd = q^-" + std::to_string(m));
      qm *= q;
    }
  }

  /// (qa, qb, c, d), the parameters of the second vector component.
  AWParams shifted() const { return AWParams(q, q * a, q * b, c, d, guard); }
};

enum class AWMethod { Hypergeometric, Recurrence };

template <class T>
struct RecurrenceCoeffs {
  T B;
  T C;
};

/// B_n and C_n of (z + z^-1) P_n = P_{n+1} + B_n P_n + C_n P_{n-1}; C_0 = 0.
template <class T>
RecurrenceCoeffs<T> recurrence_coeffs(int n, const AWParams<T>& p) {
  const T& q = p.q;
  auto qp = [&](long k) { return ipow(q, k); };
  T denB = (T(1) - qp(2 * n - 2) * p.e4) * (T(1) - qp(2 * n) * p.e4);
  if (is_zero(denB)) throw ParameterSingularity("B_" + std::to_string(n) + " denominator vanishes");
  T numB = (T(1) - qp(n) - qp(n + 1)) * p.e3 + q * p.e1 + qp(2 * n - 1) * p.e3 * p.e4 -
           qp(n - 1) * (T(1) + q - qp(n + 1)) * p.e1 * p.e4;
  T B = qp(n - 1) * numB / denB;
  if (n == 0) return {B, T(0)};
  T s = qp(n - 1);
  const T& a = p.a;
  const T& b = p.b;
  const T& c = p.c;
  const T& d = p.d;
  T num = (T(1) - s * a * b) * (T(1) - s * a * c) * (T(1) - s * a * d) * (T(1) - s * b * c) * (T(1) - s * b * d) *
          (T(1) - s * c * d) * (T(1) - qp(n)) * (T(1) - qp(n - 2) * p.e4);
  T mid = T(1) - qp(2 * n - 2) * p.e4;
  T den = (T(1) - qp(2 * n - 3) * p.e4) * mid * mid * (T(1) - qp(2 * n - 1) * p.e4);
  if (is_zero(den)) throw ParameterSingularity("C_" + std::to_string(n) + " denominator vanishes");
  return {B, num / den};
}

/// P_0..P_N by the three-term recurrence.
template <class T>
std::vector<SymLaurentPoly<T>> aw_polys_upto(int N, const AWParams<T>& p) {
  std::vector<SymLaurentPoly<T>> P;
  P.reserve(static_cast<std::size_t>(N) + 1);
  P.emplace_back(T(1));
  const SymLaurentPoly<T> w = SymLaurentPoly<T>::sym_monomial(1);
  for (int n = 0; n < N; ++n) {
    auto [B, C] = recurrence_coeffs(n, p);
    SymLaurentPoly<T> next = w * P[n] - B * P[n];
    if (n > 0) next = next - C * P[n - 1];
    P.push_back(std::move(next));
  }
  return P;
}

/// Terminating 4phi3 construction, prefactor included.
template <class T>
SymLaurentPoly<T> aw_poly_hypergeometric(int n, const AWParams<T>& p) {
  const T& q = p.q;
  const T& a = p.a;
  T qn_inv = ipow(q, -n);
  T top = ipow(q, n - 1) * p.e4;
  T ab = a * p.b, ac = a * p.c, ad = a * p.d;
  LaurentPoly<T> sum;
  T coef(1);  // (q^-n, q^{n-1}abcd; q)_k / (ab, ac, ad, q; q)_k * q^k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      T j = ipow(q, k - 1);
      T den = (T(1) - ab * j) * (T(1) - ac * j) * (T(1) - ad * j) * (T(1) - q * j);
      if (is_zero(den)) throw ParameterSingularity("vanishing (ab,ac,ad,q;q)_k in the 4phi3 denominator");
      coef *= (T(1) - qn_inv * j) * (T(1) - top * j) * q / den;
    }
    sum += az_pochhammer(a, q, k) * coef;
  }
  T pre_den = ipow(a, n) * q_pochhammer(top, q, n);
  if (is_zero(pre_den)) throw ParameterSingularity("vanishing (abcd q^{n-1}; q)_n in the monic prefactor");
  T pre = q_pochhammer(ab, q, n) * q_pochhammer(ac, q, n) * q_pochhammer(ad, q, n) / pre_den;
  return SymLaurentPoly<T>(sum * pre);
}

template <class T>
SymLaurentPoly<T> aw_poly(int n, const AWParams<T>& p, AWMethod method = AWMethod::Recurrence) {
  if (n < 0) throw InvalidParameters("aw_poly: negative degree");
  if (method == AWMethod::Hypergeometric) return aw_poly_hypergeometric(n, p);
  return aw_polys_upto(n, p).back();
}

namespace detail {

/// Numerator and denominator of A[z] = (1-az)(1-bz)(1-cz)(1-dz) / ((1-z^2)(1-qz^2)).
template <class T>
LaurentPoly<T> linear_factor(const T& root_coeff) {
  // 1 - r z
  return LaurentPoly<T>(T(1)) - LaurentPoly<T>::monomial(1, root_coeff);
}

template <class T>
LaurentPoly<T> one_minus_s_z2(const T& s) {
  return LaurentPoly<T>(T(1)) - LaurentPoly<T>::monomial(2, s);
}

template <class T>
LaurentPoly<T> s_minus_z2(const T& s) {
  return LaurentPoly<T>(s) - LaurentPoly<T>::monomial(2);
}

}  // namespace detail

/// The second order q-difference operator L_{a,b,c,d;q}, applied exactly.
/// Only (q, a, b, c, d) are used; the shifted pack is passed the same way.
template <class T>
LaurentPoly<T> aw_L_apply(const LaurentPoly<T>& f, const T& q, const T& a, const T& b, const T& c, const T& d) {
  using detail::linear_factor;
  using L = LaurentPoly<T>;
  // A[z] = N(z) / ((1-z^2)(1-qz^2)),  A[1/z] = z^4 N(1/z) / ((1-z^2)(q-z^2)).
  L N = linear_factor(a) * linear_factor(b) * linear_factor(c) * linear_factor(d);
  L N_reflected = N.reflect().shift(4);
  L up = f.dilate(q) - f;
  L down = f.dilate(T(1) / q) - f;
  L num = N * detail::s_minus_z2(q) * up + N_reflected * detail::one_minus_s_z2(q) * down;
  L den = detail::one_minus_s_z2(T(1)) * detail::one_minus_s_z2(q) * detail::s_minus_z2(q);
  return exact_divide(num, den);
}

template <class T>
SymLaurentPoly<T> aw_L_apply(const SymLaurentPoly<T>& f, const AWParams<T>& p) {
  return SymLaurentPoly<T>(aw_L_apply(f.laurent(), p.q, p.a, p.b, p.c, p.d));
}

/// (q^-n - 1)(1 - abcd q^{n-1}).
template <class T>
T aw_eigenvalue(int n, const AWParams<T>& p) {
  return (ipow(p.q, -n) - T(1)) * (T(1) - p.e4 * ipow(p.q, n - 1));
}

/// Closed-form norm (q,ab,ac,ad,bc,bd,cd;q)_n / ((abcd;q)_{2n} (q^{n-1}abcd;q)_n).
template <class T>
T aw_norm(int n, const AWParams<T>& p) {
  const T& q = p.q;
  T num = q_pochhammer(q, q, n);
  for (const T& pair : {T(p.a * p.b), T(p.a * p.c), T(p.a * p.d), T(p.b * p.c), T(p.b * p.d), T(p.c * p.d)})
    num *= q_pochhammer(pair, q, n);
  T den = q_pochhammer(p.e4, q, 2 * n) * q_pochhammer(T(ipow(q, n - 1) * p.e4), q, n);
  if (is_zero(den)) throw ParameterSingularity("norm denominator vanishes");
  return num / den;
}

/// h_n as the product C_1 ... C_n.
template <class T>
T aw_norm_product(int n, const AWParams<T>& p) {
  T h(1);
  for (int k = 1; k <= n; ++k) h *= recurrence_coeffs(k, p).C;
  return h;
}

struct FavardReport {
  bool real_B = true;
  bool positive_C = true;
  bool sufficient_condition = false;
  std::optional<int> first_nonpositive;  // offending n when positive_C fails
  int checked_up_to = 0;
};

/// Positivity conditions of Favard's theorem checked for n <= N, plus the
/// standard sufficient condition (real parameters, |pairwise products| < 1).
template <class T>
FavardReport favard_check(const AWParams<T>& p, int N) {
  FavardReport r;
  r.checked_up_to = N;
  for (int n = 1; n <= N; ++n) {
    T C = recurrence_coeffs(n, p).C;
    if (!(C > 0)) {
      r.positive_C = false;
      r.first_nonpositive = n;
      break;
    }
  }
  const std::array<T, 4> v{p.a, p.b, p.c, p.d};
  r.sufficient_condition = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      T prod = v[i] * v[j];
      if (!(prod < 1 && prod > -1)) r.sufficient_condition = false;
    }
  return r;
}

template <class T>
using OrthoBasis = MonicBasis<SymLaurentPoly<T>, T>;

/// Monic basis P_0..P_N with norms h_n = C_1 ... C_n.
template <class T>
OrthoBasis<T> make_aw_basis(const AWParams<T>& p, int N) {
  std::vector<SymLaurentPoly<T>> polys = aw_polys_upto(N, p);
  std::vector<T> norms;
  norms.reserve(polys.size());
  T h(1);
  norms.push_back(h);
  for (int n = 1; n <= N; ++n) {
    h *= recurrence_coeffs(n, p).C;
    norms.push_back(h);
  }
  return OrthoBasis<T>(std::move(polys), std::move(norms));
}

template <class T>
std::vector<T> basis_expand(const SymLaurentPoly<T>& f, const OrthoBasis<T>& basis) {
  return basis.expand(f);
}

template <class T>
T inner_product_sym(const SymLaurentPoly<T>& f, const SymLaurentPoly<T>& g, const AWParams<T>& p) {
  int depth = std::max({f.degree(), g.degree(), 0});
  return make_aw_basis(p, depth).inner(f, g);
}

}  // namespace awvec
