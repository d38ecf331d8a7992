#pragma once

// The double affine Hecke algebra of type (C1v, C1) acting on Laurent
// polynomials, the operator Y = T1 T0, and its 2x2 matrix form on pairs of
// symmetric Laurent polynomials.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "awvec/askey_wilson.hpp"
#include "awvec/mutation.hpp"
#include "awvec/vector_form.hpp"

namespace awvec {

enum class HeckeGen { Z, Zinv, T1, T0 };

namespace detail {

template <class T>
LaurentPoly<T> r_minus_z(const T& r) {
  return LaurentPoly<T>(r) - LaurentPoly<T>::monomial(1);
}

template <class T>
LaurentPoly<T> lin(const T& r) {
  return linear_factor(r);
}

}  // namespace detail

template <class T>
LaurentPoly<T> hecke_apply(HeckeGen g, const LaurentPoly<T>& f, const AWParams<T>& p,
                           Mutation mutation = Mutation::None) {
  using L = LaurentPoly<T>;
  using namespace detail;
  switch (g) {
    case HeckeGen::Z:
      return f.shift(1);
    case HeckeGen::Zinv:
      return f.shift(-1);
    case HeckeGen::T1: {
      // [((a+b)z - (1+ab)) f + (1-az)(1-bz) f[1/z]] / (1 - z^2)
      L first = L::monomial(1, T(p.a + p.b)) - L(T(1 + p.a * p.b));
      L refl = lin(p.a) * lin(p.b) * f.reflect();
      if (mutation == Mutation::T1ReflectionSign) refl = -refl;
      return exact_divide(first * f + refl, one_minus_s_z2(T(1)));
    }
    case HeckeGen::T0: {
      // [q^-1 z((cd+q)z - (c+d)q) f - (c-z)(d-z) f[q/z]] / (q - z^2)
      L first = L::monomial(2, T((p.c * p.d + p.q) / p.q)) - L::monomial(1, T(p.c + p.d));
      L second = r_minus_z(p.c) * r_minus_z(p.d) * substitute(f, Substitution::QReflect, p.q);
      return exact_divide(first * f - second, s_minus_z2(p.q));
    }
  }
  return f;
}

enum class YRoute { Composition, Explicit };

/// Y f via T1(T0 f), or via the explicit q-difference-reflection formula.
template <class T>
LaurentPoly<T> scalar_Y_apply(const LaurentPoly<T>& f, const AWParams<T>& p, YRoute route = YRoute::Composition,
                              Mutation mutation = Mutation::None) {
  if (route == YRoute::Composition)
    return hecke_apply(HeckeGen::T1, hecke_apply(HeckeGen::T0, f, p, mutation), p, mutation);
  using L = LaurentPoly<T>;
  using namespace detail;
  const T &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  // Common denominator (1 - z^2)(1 - qz^2)(q - z^2).
  L N = lin(a) * lin(b) * lin(c) * lin(d);
  L t1 = N * (f.dilate(q) - f) * s_minus_z2(q);
  L mid = L::monomial(1, T((c + d) * q)) - L(T(c * d + q));
  L t2 = lin(a) * lin(b) * mid * (f.reflect() - f) * s_minus_z2(q) / q;
  L ab_lin = L(T(1 + a * b)) - L::monomial(1, T(a + b));
  L t3 = r_minus_z(c) * r_minus_z(d) * ab_lin * (substitute(f, Substitution::QReflect, q) - f) * one_minus_s_z2(q);
  L den = one_minus_s_z2(T(1)) * one_minus_s_z2(q) * s_minus_z2(q);
  return f * T(p.e4 / q) + exact_divide(t1 + t2 + t3, den);
}

struct RelationResult {
  std::string relation;
  bool passed = true;
  std::optional<int> first_failing_k;
  std::string error;  // exception text when the failure was a throw
};

struct RelationsReport {
  int maxdeg = 0;
  std::vector<RelationResult> relations;
  bool all_passed() const {
    for (const auto& r : relations)
      if (!r.passed) return false;
    return true;
  }
};

/// 0, 1, -1, 2, -2, ..., maxdeg, -maxdeg.
inline std::vector<int> monomial_order(int maxdeg) {
  std::vector<int> ks{0};
  for (int k = 1; k <= maxdeg; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

/// The four quadratic relations applied to every z^k with |k| <= maxdeg.
template <class T>
RelationsReport daha_relations_check(const AWParams<T>& p, int maxdeg, Mutation mutation = Mutation::None) {
  using L = LaurentPoly<T>;
  auto T1 = [&](const L& f) { return hecke_apply(HeckeGen::T1, f, p, mutation); };
  auto T0 = [&](const L& f) { return hecke_apply(HeckeGen::T0, f, p, mutation); };
  auto T1Z = [&](const L& f) { return T1(f.shift(1)); };
  auto qT0Zi = [&](const L& f) { return T0(f.shift(-1)) * p.q; };
  T ab = p.a * p.b;
  T cd_q = p.c * p.d / p.q;
  // (X + r)(X + s) f = X(X f) + (r + s) X f + rs f
  auto quadratic = [](auto X, const T& r, const T& s) {
    return [X, r, s](const L& f) {
      L Xf = X(f);
      return X(Xf) + Xf * T(r + s) + f * T(r * s);
    };
  };
  struct Named {
    const char* name;
    std::function<L(const L&)> apply;
  };
  std::array<Named, 4> rels{{
      {"(T1+ab)(T1+1)", quadratic(T1, ab, T(1))},
      {"(T0+cd/q)(T0+1)", quadratic(T0, cd_q, T(1))},
      {"(T1 Z+a)(T1 Z+b)", quadratic(T1Z, p.a, p.b)},
      {"(q T0 Z^-1+c)(q T0 Z^-1+d)", quadratic(qT0Zi, p.c, p.d)},
  }};
  RelationsReport report;
  report.maxdeg = maxdeg;
  const std::vector<int> ks = monomial_order(maxdeg);
  for (const auto& rel : rels) {
    RelationResult r;
    r.relation = rel.name;
    for (int k : ks) {
      bool ok = false;
      try {
        ok = rel.apply(L::monomial(k)).is_zero();
      } catch (const Error& e) {
        r.error = e.what();
      }
      if (!ok) {
        r.passed = false;
        r.first_failing_k = k;
        break;
      }
    }
    report.relations.push_back(std::move(r));
  }
  return report;
}

struct RouteReport {
  int maxdeg = 0;
  bool passed = true;
  std::optional<int> first_failing_k;
};

/// Composition route against the explicit formula on z^k, |k| <= maxdeg.
template <class T>
RouteReport y_route_check(const AWParams<T>& p, int maxdeg, Mutation mutation = Mutation::None) {
  RouteReport r;
  r.maxdeg = maxdeg;
  for (int k : monomial_order(maxdeg)) {
    LaurentPoly<T> f = LaurentPoly<T>::monomial(k);
    bool ok = false;
    try {
      ok = scalar_Y_apply(f, p, YRoute::Composition, mutation) == scalar_Y_apply(f, p, YRoute::Explicit, mutation);
    } catch (const Error&) {
    }
    if (!ok) {
      r.passed = false;
      r.first_failing_k = k;
      break;
    }
  }
  return r;
}

template <class T>
struct T1Classification {
  bool symmetric_part_ok = false;  // T1 f = -ab f and f symmetric
  std::optional<SymLaurentPoly<T>> antisym_witness;  // g with f = z^-1(1-az)(1-bz) g, when T1 f = -f
  T eigenvalue;
};

/// Sorts f into the -ab or -1 eigenspace of T1; NotAnEigenvector otherwise.
template <class T>
T1Classification<T> t1_classify(const LaurentPoly<T>& f, const AWParams<T>& p) {
  LaurentPoly<T> image = hecke_apply(HeckeGen::T1, f, p);
  T1Classification<T> out;
  const T ab = p.a * p.b;
  if (image == f * T(-ab)) {
    if (!f.is_symmetric()) throw NotAnEigenvector("eigenvalue -ab on a non-symmetric input");
    out.symmetric_part_ok = true;
    out.eigenvalue = -ab;
    return out;
  }
  if (image == -f) {
    VecSymPair<T> v = sym_decompose_ab(f, p.a, p.b);
    if (!v.f1.is_zero()) throw NotAnEigenvector("eigenvalue -1 but the symmetric component is nonzero");
    out.antisym_witness = v.f2;
    out.eigenvalue = T(-1);
    return out;
  }
  throw NotAnEigenvector("T1 f is neither -ab f nor -f for f = " + to_string(f));
}

// ---------------------------------------------------------------------------
// Matrix entries.

template <class T>
SymLaurentPoly<T> Y11_apply(const SymLaurentPoly<T>& f, const AWParams<T>& p) {
  T ab = p.a * p.b;
  LaurentPoly<T> Lf = aw_L_apply(f.laurent(), p.q, p.a, p.b, p.c, p.d);
  return SymLaurentPoly<T>(f.laurent() * T(p.e4 / p.q) - Lf * T(ab / (1 - ab)));
}

template <class T>
SymLaurentPoly<T> Y22_apply(const SymLaurentPoly<T>& f, const AWParams<T>& p) {
  const T &q = p.q, &a = p.a, &b = p.b;
  T ab = a * b;
  T k = 1 - p.e4 - ab * q + p.e4 * q;
  LaurentPoly<T> Lf = aw_L_apply(f.laurent(), q, T(q * a), T(q * b), p.c, p.d);
  return SymLaurentPoly<T>((f.laurent() * k + Lf) / T(q * (1 - ab)));
}

template <class T>
SymLaurentPoly<T> Y21_apply(const SymLaurentPoly<T>& g, const AWParams<T>& p, Mutation mutation = Mutation::None) {
  using L = LaurentPoly<T>;
  using namespace detail;
  const T &q = p.q, &c = p.c, &d = p.d;
  const L& gz = g.laurent();
  L down = gz.dilate(T(1) / q) - gz;
  L up = gz.dilate(q) - gz;
  L first = (r_minus_z(c) * r_minus_z(d) * down).shift(1);
  L second = (lin(c) * lin(d) * up).shift(1);
  T scale = 1 - p.a * p.b;
  if (mutation == Mutation::Y21PrintedDenominator) {
    L den = one_minus_s_z2(T(1)) * one_minus_s_z2(q);
    return SymLaurentPoly<T>(exact_divide(first + second, den) / scale);
  }
  L num = first * one_minus_s_z2(q) + second * s_minus_z2(q);
  L den = one_minus_s_z2(T(1)) * s_minus_z2(q) * one_minus_s_z2(q);
  return SymLaurentPoly<T>(exact_divide(num, den) / scale);
}

template <class T>
SymLaurentPoly<T> Y12_apply(const SymLaurentPoly<T>& h, const AWParams<T>& p, Mutation mutation = Mutation::None) {
  using L = LaurentPoly<T>;
  using namespace detail;
  const T &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const L& hz = h.laurent();
  // Over q(1-ab) z (1-z^2)(q-z^2)(1-qz^2), each term multiplied out.
  L bracket = (L(T(1)) + L::monomial(2)) * T(c * d + q) - L::monomial(1, T((1 + q) * (c + d)));
  L t1 = r_minus_z(a) * r_minus_z(b) * lin(a) * lin(b) * bracket * hz * one_minus_s_z2(T(1)) * q;
  L aq_z = mutation == Mutation::Y12DroppedFactor ? L(T(1)) : r_minus_z(T(a * q));
  L t2 = r_minus_z(a) * r_minus_z(b) * r_minus_z(c) * r_minus_z(d) * aq_z * r_minus_z(T(b * q)) *
         hz.dilate(T(1) / q) * one_minus_s_z2(q);
  L t3 = lin(a) * lin(b) * lin(c) * lin(d) * lin(T(a * q)) * lin(T(b * q)) * hz.dilate(q) * s_minus_z2(q);
  L num = (t1 - t2 - t3) * T(a * b);
  L den = (one_minus_s_z2(T(1)) * s_minus_z2(q) * one_minus_s_z2(q)).shift(1) * T(q * (1 - a * b));
  return SymLaurentPoly<T>(exact_divide(num, den));
}

template <class T>
VecSymPair<T> matrix_Y_apply(const VecSymPair<T>& v, const AWParams<T>& p, Mutation mutation = Mutation::None) {
  return {Y11_apply(v.f1, p) + Y12_apply(v.f2, p, mutation), Y21_apply(v.f1, p, mutation) + Y22_apply(v.f2, p)};
}

struct DegreeResult {
  int k = 0;
  bool passed = false;
  std::string error;
};

struct ConsistencyReport {
  int maxdeg = 0;
  std::vector<DegreeResult> degrees;
  bool all_passed() const {
    for (const auto& d : degrees)
      if (!d.passed) return false;
    return !degrees.empty();
  }
  std::optional<int> first_failure() const {
    for (const auto& d : degrees)
      if (!d.passed) return d.k;
    return std::nullopt;
  }
};

/// decompose, matrix Y, recompose against scalar Y on z^k, |k| <= maxdeg.
template <class T>
ConsistencyReport decomposition_consistency_check(const AWParams<T>& p, int maxdeg, Mutation mutation = Mutation::None) {
  ConsistencyReport report;
  report.maxdeg = maxdeg;
  for (int k : monomial_order(maxdeg)) {
    DegreeResult r;
    r.k = k;
    LaurentPoly<T> f = LaurentPoly<T>::monomial(k);
    try {
      VecSymPair<T> image = matrix_Y_apply(sym_decompose_ab(f, p.a, p.b), p, mutation);
      r.passed = sym_recompose_ab(image, p.a, p.b) == scalar_Y_apply(f, p);
    } catch (const Error& e) {
      r.error = e.what();
    }
    report.degrees.push_back(std::move(r));
  }
  return report;
}

}  // namespace awvec
