#pragma once

// Sparse Laurent polynomials in z, their symmetric subclass, and ordinary
// polynomials in x.

#include <algorithm>
#include <complex>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "awvec/errors.hpp"
#include "awvec/scalar.hpp"

namespace awvec {

template <class T>
class LaurentPoly {
 public:
  using Coeffs = std::map<int, T>;

  LaurentPoly() = default;
  LaurentPoly(const T& constant) { set(0, constant); }  // NOLINT(implicit)
  LaurentPoly(int constant) : LaurentPoly(T(constant)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(int k, const T& c = T(1)) {
    LaurentPoly p;
    p.set(k, c);
    return p;
  }

  static LaurentPoly from_coeffs(const Coeffs& coeffs) {
    LaurentPoly p;
    for (const auto& [k, c] : coeffs) p.set(k, c);
    return p;
  }

  /// The variable z itself.
  static LaurentPoly z() { return monomial(1); }

  const Coeffs& coeffs() const { return coeffs_; }

  T coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? T(0) : it->second;
  }

  void set(int k, const T& c) {
    if (awvec::is_zero(c))
      coeffs_.erase(k);
    else
      coeffs_[k] = c;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }

  /// Highest exponent; INT_MIN for the zero polynomial.
  int max_degree() const {
    return coeffs_.empty() ? std::numeric_limits<int>::min() : coeffs_.rbegin()->first;
  }
  /// Lowest exponent; INT_MAX for the zero polynomial.
  int min_degree() const {
    return coeffs_.empty() ? std::numeric_limits<int>::max() : coeffs_.begin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) {
      auto it = coeffs_.find(k);
      if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
      } else {
        it->second += c;
        if (awvec::is_zero(it->second)) coeffs_.erase(it);
      }
    }
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) {
      auto it = coeffs_.find(k);
      if (it == coeffs_.end()) {
        T neg = -c;
        coeffs_.emplace(k, neg);
      } else {
        it->second -= c;
        if (awvec::is_zero(it->second)) coeffs_.erase(it);
      }
    }
    return *this;
  }

  LaurentPoly& operator*=(const T& s) {
    if (awvec::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [k, c] : coeffs_) c *= s;
    return *this;
  }

  LaurentPoly& operator/=(const T& s) {
    if (awvec::is_zero(s)) throw DivisionNotExact("division of a Laurent polynomial by zero scalar");
    for (auto& [k, c] : coeffs_) c /= s;
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const T& s) { return a *= s; }
  friend LaurentPoly operator*(const T& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator/(LaurentPoly a, const T& s) { return a /= s; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [k, c] : a.coeffs_) c = -c;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    Coeffs out;
    for (const auto& [i, ci] : a.coeffs_) {
      for (const auto& [j, cj] : b.coeffs_) {
        T prod = ci * cj;
        auto [it, inserted] = out.try_emplace(i + j, prod);
        if (!inserted) it->second += prod;
      }
    }
    LaurentPoly r;
    for (auto& [k, c] : out)
      if (!awvec::is_zero(c)) r.coeffs_.emplace(k, std::move(c));
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Exact value at z0. Throws ZeroPoint for z0 = 0 when negative powers exist.
  T eval(const T& z0) const {
    if (coeffs_.empty()) return T(0);
    if (awvec::is_zero(z0)) {
      if (min_degree() < 0) throw ZeroPoint("evaluation at z = 0 of a polynomial with negative powers");
      return coeff(0);
    }
    T total(0);
    for (const auto& [k, c] : coeffs_) total += c * ipow(z0, k);
    return total;
  }

  /// Multiply by z^k.
  LaurentPoly shift(int k) const {
    LaurentPoly r;
    for (const auto& [i, c] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), i + k, c);
    return r;
  }

  /// f[z^-1].
  LaurentPoly reflect() const {
    LaurentPoly r;
    for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(-i, c);
    return r;
  }

  /// f[s z].
  LaurentPoly dilate(const T& s) const {
    LaurentPoly r;
    for (const auto& [i, c] : coeffs_) r.set(i, c * ipow(s, i));
    return r;
  }

  /// d/dz.
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (const auto& [i, c] : coeffs_)
      if (i != 0) r.set(i - 1, c * T(i));
    return r;
  }

  bool is_symmetric() const {
    for (const auto& [i, c] : coeffs_)
      if (i > 0 && coeff(-i) != c) return false;
    return true;
  }

 private:
  Coeffs coeffs_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const LaurentPoly<T>& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    const auto& [k, c] = *it;
    std::ostringstream cs;
    cs << c;
    std::string s = cs.str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << s;
      continue;
    }
    if (s != "1") os << s << "*";
    os << "z";
    if (k != 1) os << "^" << k;
  }
  return os;
}

template <class T>
std::string to_string(const LaurentPoly<T>& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

/// Value at a complex point, coefficients rounded to double.
template <class T>
std::complex<double> eval_complex(const LaurentPoly<T>& f, std::complex<double> z0) {
  std::complex<double> total = 0;
  for (const auto& [k, c] : f.coeffs()) total += to_double(c) * std::pow(z0, k);
  return total;
}

// ---------------------------------------------------------------------------
// Substitutions z -> qz, q^-1 z, z^-1, q z^-1, q^-1 z^-1.

enum class Substitution { QShift, QInverseShift, Reflect, QReflect, QInverseReflect };

template <class T>
LaurentPoly<T> substitute(const LaurentPoly<T>& f, Substitution rule, const T& q) {
  if (is_zero(q)) throw InvalidParameters("substitution with q = 0");
  switch (rule) {
    case Substitution::QShift:
      return f.dilate(q);
    case Substitution::QInverseShift:
      return f.dilate(T(1) / q);
    case Substitution::Reflect:
      return f.reflect();
    case Substitution::QReflect:
      return f.dilate(q).reflect();
    case Substitution::QInverseReflect:
      return f.dilate(T(1) / q).reflect();
  }
  return f;
}

/// g with g * den == num, or DivisionNotExact.
template <class T>
LaurentPoly<T> exact_divide(const LaurentPoly<T>& num, const LaurentPoly<T>& den) {
  if (den.is_zero()) throw DivisionNotExact("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly<T>();
  // Strip powers of z (units) and do ordinary long division; den(0) != 0
  // afterwards so exactness over Laurent polynomials is exactness over
  // polynomials.
  const int num_low = num.min_degree();
  const int den_low = den.min_degree();
  LaurentPoly<T> rem = num.shift(-num_low);
  const LaurentPoly<T> d = den.shift(-den_low);
  const int d_top = d.max_degree();
  const T d_lead = d.coeff(d_top);
  LaurentPoly<T> quot;
  while (!rem.is_zero() && rem.max_degree() >= d_top) {
    const int k = rem.max_degree() - d_top;
    T c = rem.coeff(rem.max_degree()) / d_lead;
    quot.set(k, c);
    rem -= (d * c).shift(k);
  }
  if (!rem.is_zero()) {
    throw DivisionNotExact("Laurent polynomial division leaves remainder " + to_string(rem.shift(num_low)));
  }
  return quot.shift(num_low - den_low);
}

// ---------------------------------------------------------------------------

/// Laurent polynomial with c_k == c_{-k}; the invariant is checked on entry.
template <class T>
class SymLaurentPoly {
 public:
  SymLaurentPoly() = default;
  SymLaurentPoly(const T& constant) : poly_(constant) {}  // NOLINT(implicit)
  explicit SymLaurentPoly(LaurentPoly<T> f) : poly_(std::move(f)) {
    if (!poly_.is_symmetric()) throw NotSymmetric("not a symmetric Laurent polynomial: " + to_string(poly_));
  }

  /// z^k + z^-k (or 1 for k = 0).
  static SymLaurentPoly sym_monomial(int k) {
    if (k == 0) return SymLaurentPoly(T(1));
    return SymLaurentPoly(LaurentPoly<T>::monomial(k) + LaurentPoly<T>::monomial(-k));
  }

  const LaurentPoly<T>& laurent() const { return poly_; }
  operator const LaurentPoly<T>&() const { return poly_; }  // NOLINT(implicit)

  int degree() const { return poly_.is_zero() ? -1 : poly_.max_degree(); }
  T coeff(int k) const { return poly_.coeff(k); }
  bool is_zero() const { return poly_.is_zero(); }

  friend SymLaurentPoly operator+(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    return SymLaurentPoly(a.poly_ + b.poly_, Unchecked{});
  }
  friend SymLaurentPoly operator-(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    return SymLaurentPoly(a.poly_ - b.poly_, Unchecked{});
  }
  friend SymLaurentPoly operator*(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    return SymLaurentPoly(a.poly_ * b.poly_, Unchecked{});
  }
  friend SymLaurentPoly operator*(const T& s, const SymLaurentPoly& a) { return SymLaurentPoly(a.poly_ * s, Unchecked{}); }
  friend SymLaurentPoly operator*(const SymLaurentPoly& a, const T& s) { return SymLaurentPoly(a.poly_ * s, Unchecked{}); }
  friend SymLaurentPoly operator-(const SymLaurentPoly& a) { return SymLaurentPoly(-a.poly_, Unchecked{}); }

  friend bool operator==(const SymLaurentPoly& a, const SymLaurentPoly& b) { return a.poly_ == b.poly_; }
  friend bool operator!=(const SymLaurentPoly& a, const SymLaurentPoly& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const SymLaurentPoly& f) { return os << f.poly_; }

 private:
  struct Unchecked {};
  SymLaurentPoly(LaurentPoly<T> f, Unchecked) : poly_(std::move(f)) {}
  LaurentPoly<T> poly_;
};

// ---------------------------------------------------------------------------

/// Ordinary polynomial in x (nonnegative exponents only).
template <class T>
class OrdinaryPoly {
 public:
  OrdinaryPoly() = default;
  OrdinaryPoly(const T& constant) { set(0, constant); }  // NOLINT(implicit)
  OrdinaryPoly(int constant) : OrdinaryPoly(T(constant)) {}  // NOLINT(implicit)

  static OrdinaryPoly monomial(int k, const T& c = T(1)) {
    OrdinaryPoly p;
    p.set(k, c);
    return p;
  }
  static OrdinaryPoly x() { return monomial(1); }

  const std::map<int, T>& coeffs() const { return coeffs_; }
  T coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? T(0) : it->second;
  }
  void set(int k, const T& c) {
    if (k < 0) throw InvalidParameters("negative exponent in an ordinary polynomial");
    if (awvec::is_zero(c))
      coeffs_.erase(k);
    else
      coeffs_[k] = c;
  }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  OrdinaryPoly& operator+=(const OrdinaryPoly& o) {
    for (const auto& [k, c] : o.coeffs_) set(k, coeff(k) + c);
    return *this;
  }
  OrdinaryPoly& operator-=(const OrdinaryPoly& o) {
    for (const auto& [k, c] : o.coeffs_) set(k, coeff(k) - c);
    return *this;
  }
  OrdinaryPoly& operator*=(const T& s) {
    if (awvec::is_zero(s)) coeffs_.clear();
    for (auto& [k, c] : coeffs_) c *= s;
    return *this;
  }
  friend OrdinaryPoly operator+(OrdinaryPoly a, const OrdinaryPoly& b) { return a += b; }
  friend OrdinaryPoly operator-(OrdinaryPoly a, const OrdinaryPoly& b) { return a -= b; }
  friend OrdinaryPoly operator*(OrdinaryPoly a, const T& s) { return a *= s; }
  friend OrdinaryPoly operator*(const T& s, OrdinaryPoly a) { return a *= s; }
  friend OrdinaryPoly operator-(OrdinaryPoly a) { return a *= T(-1); }
  friend OrdinaryPoly operator*(const OrdinaryPoly& a, const OrdinaryPoly& b) {
    OrdinaryPoly r;
    for (const auto& [i, ci] : a.coeffs_)
      for (const auto& [j, cj] : b.coeffs_) r.set(i + j, r.coeff(i + j) + ci * cj);
    return r;
  }
  friend bool operator==(const OrdinaryPoly& a, const OrdinaryPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const OrdinaryPoly& a, const OrdinaryPoly& b) { return !(a == b); }

  T eval(const T& x0) const {
    T total(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      // Horner over the sparse representation.
      auto next = std::next(it);
      int gap = it->first - (next == coeffs_.rend() ? 0 : next->first);
      total = (total + it->second) * ipow(x0, gap);
    }
    return total;
  }

  /// p(s x).
  OrdinaryPoly dilate(const T& s) const {
    OrdinaryPoly r;
    for (const auto& [k, c] : coeffs_) r.set(k, c * ipow(s, k));
    return r;
  }

  OrdinaryPoly derivative() const {
    OrdinaryPoly r;
    for (const auto& [k, c] : coeffs_)
      if (k > 0) r.set(k - 1, c * T(k));
    return r;
  }

  /// p(x)/x; the constant term must vanish.
  OrdinaryPoly divide_by_x() const {
    if (!awvec::is_zero(coeff(0))) throw DivisionNotExact("polynomial with nonzero constant term divided by x");
    OrdinaryPoly r;
    for (const auto& [k, c] : coeffs_) r.set(k - 1, c);
    return r;
  }

 private:
  std::map<int, T> coeffs_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const OrdinaryPoly<T>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [k, c] = *it;
    std::ostringstream cs;
    cs << c;
    std::string s = cs.str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (k == 0) {
      os << s;
      continue;
    }
    if (s != "1") os << s << "*";
    os << "x";
    if (k != 1) os << "^" << k;
  }
  return os;
}

template <class T>
std::string to_string(const OrdinaryPoly<T>& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

/// p(u(z)) for a Laurent polynomial u, by Horner.
template <class T>
LaurentPoly<T> compose(const OrdinaryPoly<T>& p, const LaurentPoly<T>& u) {
  LaurentPoly<T> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * u + LaurentPoly<T>(p.coeff(k));
  return acc;
}

}  // namespace awvec
