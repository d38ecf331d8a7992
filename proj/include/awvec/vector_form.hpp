#pragma once

// The identification of a Laurent polynomial with a pair of symmetric Laurent
// polynomials, in the two conventions used by the library:
//
//   q-case (parameters a, b):  f = f1 + z^-1 (1 - a z)(1 - b z) f2
//   Jacobi case:               f = f1 - (z - z^-1) f2
//
// A VecSymPair carries no convention tag; the calling module decides.

#include <ostream>
#include <utility>

#include "awvec/laurent.hpp"

namespace awvec {

template <class T>
struct VecSymPair {
  SymLaurentPoly<T> f1;
  SymLaurentPoly<T> f2;

  friend bool operator==(const VecSymPair& a, const VecSymPair& b) { return a.f1 == b.f1 && a.f2 == b.f2; }
  friend bool operator!=(const VecSymPair& a, const VecSymPair& b) { return !(a == b); }
  friend VecSymPair operator+(const VecSymPair& a, const VecSymPair& b) { return {a.f1 + b.f1, a.f2 + b.f2}; }
  friend VecSymPair operator-(const VecSymPair& a, const VecSymPair& b) { return {a.f1 - b.f1, a.f2 - b.f2}; }
  friend VecSymPair operator*(const T& s, const VecSymPair& a) { return {s * a.f1, s * a.f2}; }
  bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
  friend std::ostream& operator<<(std::ostream& os, const VecSymPair& v) {
    return os << "(" << v.f1 << ", " << v.f2 << ")";
  }
};

namespace detail {

/// Symmetric s with (z^-1 - z) s == g for antisymmetric g, solved from the
/// outermost degree inwards: the top coefficient of (z^-1 - z) s is -s_top.
template <class T>
SymLaurentPoly<T> divide_by_antisymmetric_unit(LaurentPoly<T> g) {
  LaurentPoly<T> s;
  const LaurentPoly<T> unit = LaurentPoly<T>::monomial(-1) - LaurentPoly<T>::monomial(1);
  while (!g.is_zero()) {
    const int top = g.max_degree();
    if (top <= 0) throw DivisionNotExact("antisymmetric part not divisible by z^-1 - z");
    T c = -g.coeff(top);
    LaurentPoly<T> term = top - 1 == 0 ? LaurentPoly<T>(c)
                                        : LaurentPoly<T>::monomial(top - 1, c) + LaurentPoly<T>::monomial(1 - top, c);
    s += term;
    g -= unit * term;
  }
  return SymLaurentPoly<T>(s);
}

}  // namespace detail

/// z^-1 (1 - a z)(1 - b z).
template <class T>
LaurentPoly<T> ab_multiplier(const T& a, const T& b) {
  LaurentPoly<T> m = LaurentPoly<T>::monomial(-1) + LaurentPoly<T>::monomial(1, a * b);
  m -= LaurentPoly<T>(T(a + b));
  return m;
}

template <class T>
VecSymPair<T> sym_decompose_ab(const LaurentPoly<T>& f, const T& a, const T& b) {
  T one_minus_ab = T(1) - a * b;
  if (is_zero(one_minus_ab)) throw DegenerateParameters("ab = 1: the (a,b) decomposition is not unique");
  // f - f* = (1 - ab)(z^-1 - z) f2.
  LaurentPoly<T> anti = (f - f.reflect()) / one_minus_ab;
  SymLaurentPoly<T> f2 = detail::divide_by_antisymmetric_unit(std::move(anti));
  SymLaurentPoly<T> f1(f - ab_multiplier(a, b) * f2.laurent());
  return {std::move(f1), std::move(f2)};
}

template <class T>
LaurentPoly<T> sym_recompose_ab(const VecSymPair<T>& v, const T& a, const T& b) {
  return v.f1.laurent() + ab_multiplier(a, b) * v.f2.laurent();
}

/// f = f1 - (z - z^-1) f2.
template <class T>
VecSymPair<T> jacobi_split(const LaurentPoly<T>& f) {
  LaurentPoly<T> reflected = f.reflect();
  SymLaurentPoly<T> f1((f + reflected) / T(2));
  // f - f* = -2 (z - z^-1) f2 = 2 (z^-1 - z) f2.
  SymLaurentPoly<T> f2 = detail::divide_by_antisymmetric_unit((f - reflected) / T(2));
  return {std::move(f1), std::move(f2)};
}

template <class T>
LaurentPoly<T> jacobi_join(const VecSymPair<T>& v) {
  LaurentPoly<T> m = LaurentPoly<T>::monomial(1) - LaurentPoly<T>::monomial(-1);
  return v.f1.laurent() - m * v.f2.laurent();
}

/// The unique p with p((z + z^-1)/2) == f[z].
template <class T>
OrdinaryPoly<T> to_x(const SymLaurentPoly<T>& f) {
  LaurentPoly<T> rest = f.laurent();
  OrdinaryPoly<T> p;
  const LaurentPoly<T> w = LaurentPoly<T>::monomial(1) + LaurentPoly<T>::monomial(-1);
  while (!rest.is_zero()) {
    const int m = rest.max_degree();
    if (m < 0) throw NotSymmetric("to_x applied to a non-symmetric polynomial");
    T c = rest.coeff(m);
    // (z + z^-1)^m = (2x)^m has leading coefficient 1 in z.
    LaurentPoly<T> power(T(1));
    for (int i = 0; i < m; ++i) power = power * w;
    rest -= power * c;
    p.set(m, p.coeff(m) + c * ipow(T(2), m));
  }
  return p;
}

/// Checked entry point for plain Laurent input; throws NotSymmetric.
template <class T>
OrdinaryPoly<T> to_x(const LaurentPoly<T>& f) {
  return to_x(SymLaurentPoly<T>(f));
}

template <class T>
SymLaurentPoly<T> from_x(const OrdinaryPoly<T>& p) {
  const LaurentPoly<T> x = (LaurentPoly<T>::monomial(1) + LaurentPoly<T>::monomial(-1)) / T(2);
  return SymLaurentPoly<T>(compose(p, x));
}

}  // namespace awvec
