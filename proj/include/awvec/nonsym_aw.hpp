#pragma once

// Nonsymmetric Askey-Wilson polynomials E_n, n in Z, in Laurent and in
// vector-valued form, with the bilinear form that makes them orthogonal.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "awvec/askey_wilson.hpp"
#include "awvec/daha.hpp"
#include "awvec/vector_form.hpp"

namespace awvec {

/// a^-1 b^-1 z^-1 (1-az)(1-bz) P_{n-1}[z; qa,qb,c,d | q], n >= 1.
template <class T>
LaurentPoly<T> Q_poly(int n, const AWParams<T>& p) {
  if (n < 1) throw InvalidParameters("Q_n needs n >= 1");
  SymLaurentPoly<T> shifted = aw_poly(n - 1, p.shifted());
  return ab_multiplier(p.a, p.b) * shifted.laurent() / T(p.a * p.b);
}

/// Coefficient of -a^-1 b^-1 P' in the second component of E_n, n >= 1:
/// (1-q^n)(1-q^{n-1}cd) / ((1-q^n ab)(1-q^{n-1}abcd)).
template <class T>
T E_positive_ratio(int n, const AWParams<T>& p) {
  T qn = ipow(p.q, n);
  T qn1 = ipow(p.q, n - 1);
  T den = (1 - qn * p.a * p.b) * (1 - qn1 * p.e4);
  if (is_zero(den)) throw ParameterSingularity("(1 - q^n ab)(1 - q^{n-1} abcd) vanishes at n = " + std::to_string(n));
  return (1 - qn) * (1 - qn1 * p.c * p.d) / den;
}

template <class T>
VecSymPair<T> E_vec(int n, const AWParams<T>& p) {
  if (n == 0) return {SymLaurentPoly<T>(T(1)), SymLaurentPoly<T>()};
  const int m = std::abs(n);
  SymLaurentPoly<T> P = aw_poly(m, p);
  SymLaurentPoly<T> Ps = aw_poly(m - 1, p.shifted());
  T ab = p.a * p.b;
  if (n < 0) return {P, T(-1 / ab) * Ps};
  return {P, T(-E_positive_ratio(m, p)) * Ps};
}

template <class T>
LaurentPoly<T> E_laurent(int n, const AWParams<T>& p) {
  if (n == 0) return LaurentPoly<T>(T(1));
  const int m = std::abs(n);
  LaurentPoly<T> P = aw_poly(m, p).laurent();
  if (n < 0) return P - Q_poly(m, p);
  return P - Q_poly(m, p) * T(p.a * p.b * E_positive_ratio(m, p));
}

/// q^n for n < 0, q^{n-1} abcd for n >= 0.
template <class T>
T E_eigenvalue(int n, const AWParams<T>& p) {
  if (n < 0) return ipow(p.q, n);
  return ipow(p.q, n - 1) * p.e4;
}

enum class EigenRoute { Scalar, Matrix, FourEquations };

template <class T>
struct EigenResidual {
  EigenRoute route;
  std::vector<LaurentPoly<T>> parts;  // 1, 2 or 4 residual polynomials
  bool is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const LaurentPoly<T>& r) { return r.is_zero(); });
  }
};

/// The four component identities for index |n| = m >= 1:
///   L_{a,b,c,d} P_m = (q^-m - 1)(1 - abcd q^{m-1}) P_m
///   L_{qa,qb,c,d} P'_{m-1} = (q^{1-m} - 1)(1 - abcd q^m) P'_{m-1}
///   Y21 P_m = (q^-m - 1)(1 - cd q^{m-1}) / (1 - ab) P'_{m-1}
///   Y12 P'_{m-1} = -ab (q^-m - ab)(1 - abcd q^{m-1}) / (1 - ab) P_m
template <class T>
std::vector<LaurentPoly<T>> four_equation_residuals(int m, const AWParams<T>& p, Mutation mutation = Mutation::None) {
  std::vector<LaurentPoly<T>> out(4);
  if (m == 0) return out;
  const T &q = p.q, &c = p.c, &d = p.d;
  AWParams<T> ps = p.shifted();
  SymLaurentPoly<T> P = aw_poly(m, p);
  SymLaurentPoly<T> Ps = aw_poly(m - 1, ps);
  T ab = p.a * p.b;
  T qm = ipow(q, -m);
  T s = ipow(q, m - 1);
  out[0] = aw_L_apply(P, p).laurent() - P.laurent() * aw_eigenvalue(m, p);
  out[1] = aw_L_apply(Ps, ps).laurent() - Ps.laurent() * aw_eigenvalue(m - 1, ps);
  T k21 = (qm - 1) * (1 - c * d * s) / (1 - ab);
  out[2] = Y21_apply(P, p, mutation).laurent() - Ps.laurent() * k21;
  T k12 = -ab * (qm - ab) * (1 - p.e4 * s) / (1 - ab);
  out[3] = Y12_apply(Ps, p, mutation).laurent() - P.laurent() * k12;
  return out;
}

template <class T>
EigenResidual<T> eigen_residual(int n, const AWParams<T>& p, EigenRoute route, Mutation mutation = Mutation::None) {
  EigenResidual<T> r{route, {}};
  T lambda = E_eigenvalue(n, p);
  switch (route) {
    case EigenRoute::Scalar: {
      LaurentPoly<T> E = E_laurent(n, p);
      r.parts.push_back(scalar_Y_apply(E, p, YRoute::Composition, mutation) - E * lambda);
      break;
    }
    case EigenRoute::Matrix: {
      VecSymPair<T> v = E_vec(n, p);
      VecSymPair<T> image = matrix_Y_apply(v, p, mutation);
      r.parts.push_back(image.f1.laurent() - v.f1.laurent() * lambda);
      r.parts.push_back(image.f2.laurent() - v.f2.laurent() * lambda);
      break;
    }
    case EigenRoute::FourEquations:
      r.parts = four_equation_residuals(std::abs(n), p, mutation);
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------

/// -ab(1-ab)(1-qab)(1-ac)(1-ad)(1-bc)(1-bd) / ((1-abcd)(1-qabcd)).
template <class T>
T bilinear_constant(const AWParams<T>& p) {
  const T &q = p.q, &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  T ab = a * b;
  T num = -ab * (1 - ab) * (1 - q * ab) * (1 - a * c) * (1 - a * d) * (1 - b * c) * (1 - b * d);
  return num / ((1 - p.e4) * (1 - q * p.e4));
}

/// The n-dependent expression that must reduce to the constant C:
/// -ab(1-q^n ab)(1-q^{n-1}abcd) / ((1-q^n)(1-q^{n-1}cd)) * h_n / h'_{n-1}.
template <class T>
T bilinear_constant_at(int n, const AWParams<T>& p) {
  T ab = p.a * p.b;
  T qn = ipow(p.q, n), qn1 = ipow(p.q, n - 1);
  T den = (1 - qn) * (1 - qn1 * p.c * p.d);
  if (is_zero(den)) throw ParameterSingularity("(1 - q^n)(1 - q^{n-1} cd) vanishes");
  return -ab * (1 - qn * ab) * (1 - qn1 * p.e4) / den * aw_norm(n, p) / aw_norm(n - 1, p.shifted());
}

template <class T>
class BilinearFormAW {
 public:
  BilinearFormAW(const AWParams<T>& p, int depth)
      : params_(p), C_(bilinear_constant(p)), base_(make_aw_basis(p, depth)), shifted_(make_aw_basis(p.shifted(), depth)) {}

  const AWParams<T>& params() const { return params_; }
  const T& C() const { return C_; }
  int depth() const { return base_.depth(); }

  T operator()(const VecSymPair<T>& g, const VecSymPair<T>& h) const {
    return base_.inner(g.f1, h.f1) + C_ * shifted_.inner(g.f2, h.f2);
  }
  T operator()(const LaurentPoly<T>& g, const LaurentPoly<T>& h) const {
    return (*this)(sym_decompose_ab(g, params_.a, params_.b), sym_decompose_ab(h, params_.a, params_.b));
  }

 private:
  AWParams<T> params_;
  T C_;
  OrthoBasis<T> base_;
  OrthoBasis<T> shifted_;
};

template <class T>
T bilinear_form(const LaurentPoly<T>& g, const LaurentPoly<T>& h, const AWParams<T>& p) {
  int depth = 0;
  for (const LaurentPoly<T>* f : {&g, &h})
    if (!f->is_zero()) depth = std::max({depth, f->max_degree(), -f->min_degree()});
  return BilinearFormAW<T>(p, depth)(g, h);
}

template <class T>
GramReport<T> gram_report(int M, const AWParams<T>& p) {
  BilinearFormAW<T> form(p, M);
  return gram_from<T>(M, [&](int n) { return E_vec(n, p); }, form);
}

struct CertificateItem {
  std::string claim;
  std::string value;
  bool holds = false;
};

struct PositivityCertificate {
  bool applicable = false;
  int checked_up_to = 0;
  std::vector<CertificateItem> items;
  bool verified() const {
    if (!applicable) return false;
    return std::all_of(items.begin(), items.end(), [](const CertificateItem& i) { return i.holds; });
  }
};

/// Checks the hypotheses and conclusions of the positivity statement, all
/// with finite scope: Favard positivity up to N and Gram diagonals up to gram_M.
template <class T>
PositivityCertificate positivity_check(const AWParams<T>& p, int N, int gram_M = 4) {
  PositivityCertificate cert;
  cert.checked_up_to = N;
  T ab = p.a * p.b;
  auto str = [](const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };
  cert.items.push_back({"ab < 0", str(ab), ab < 0});
  if (!(ab < 0)) return cert;
  cert.applicable = true;
  T cd = p.c * p.d;
  cert.items.push_back({"cd < 1", str(cd), cd < 1});
  cert.items.push_back({"abcd < 1", str(p.e4), p.e4 < 1});
  FavardReport f0 = favard_check(p, N);
  cert.items.push_back({"C_n > 0 for (a,b,c,d), n <= " + std::to_string(N),
                        f0.first_nonpositive ? "fails at n=" + std::to_string(*f0.first_nonpositive) : "ok",
                        f0.positive_C});
  AWParams<T> ps = p.shifted();
  FavardReport f1 = favard_check(ps, N);
  cert.items.push_back({"C_n > 0 for (qa,qb,c,d), n <= " + std::to_string(N),
                        f1.first_nonpositive ? "fails at n=" + std::to_string(*f1.first_nonpositive) : "ok",
                        f1.positive_C});
  T C = bilinear_constant(p);
  cert.items.push_back({"C > 0", str(C), C > 0});
  GramReport<T> g = gram_report(gram_M, p);
  cert.items.push_back({"<E_n,E_n> > 0 for |n| <= " + std::to_string(gram_M), g.positive_diagonal() ? "ok" : "fails",
                        g.positive_diagonal()});
  return cert;
}

}  // namespace awvec
