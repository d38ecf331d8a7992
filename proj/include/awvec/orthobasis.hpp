#pragma once

// Monic orthogonal bases with known norms. Inner products of arbitrary
// polynomials are computed by expanding in the basis (triangular, since every
// basis element is monic) and weighting by the norms; no measure is needed.

#include <string>
#include <utility>
#include <vector>

#include "awvec/errors.hpp"
#include "awvec/laurent.hpp"

namespace awvec {

namespace detail {

template <class T>
std::pair<int, T> leading(const LaurentPoly<T>& f) {
  return {f.max_degree(), f.coeff(f.max_degree())};
}
template <class T>
std::pair<int, T> leading(const SymLaurentPoly<T>& f) {
  return leading(f.laurent());
}
template <class T>
std::pair<int, T> leading(const OrdinaryPoly<T>& f) {
  return {f.degree(), f.coeff(f.degree())};
}

}  // namespace detail

template <class Poly, class T>
class MonicBasis {
 public:
  MonicBasis() = default;
  MonicBasis(std::vector<Poly> polys, std::vector<T> norms) : polys_(std::move(polys)), norms_(std::move(norms)) {
    if (polys_.size() != norms_.size()) throw InvalidParameters("basis and norm lists differ in length");
  }

  int depth() const { return static_cast<int>(polys_.size()) - 1; }
  const Poly& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }
  const T& norm(int n) const { return norms_.at(static_cast<std::size_t>(n)); }
  const std::vector<Poly>& polys() const { return polys_; }
  const std::vector<T>& norms() const { return norms_; }

  /// Coefficients c_0..c_m with f = sum c_n P_n.
  std::vector<T> expand(const Poly& f) const {
    if (f.is_zero()) return {};
    auto [top, lead] = detail::leading(f);
    if (top > depth())
      throw InsufficientBasisDepth("basis holds degree " + std::to_string(depth()) + ", input has degree " +
                                   std::to_string(top));
    std::vector<T> c(static_cast<std::size_t>(top) + 1, T(0));
    Poly rest = f;
    while (!rest.is_zero()) {
      auto [m, cm] = detail::leading(rest);
      if (m < 0) throw InsufficientBasisDepth("expansion reached negative degree; input outside the basis span");
      c[static_cast<std::size_t>(m)] = cm;
      rest = rest - cm * polys_[static_cast<std::size_t>(m)];
    }
    return c;
  }

  Poly reconstruct(const std::vector<T>& c) const {
    Poly f;
    for (std::size_t n = 0; n < c.size(); ++n) f = f + c[n] * polys_.at(n);
    return f;
  }

  T inner(const Poly& f, const Poly& g) const {
    std::vector<T> cf = expand(f);
    std::vector<T> cg = expand(g);
    T total(0);
    for (std::size_t n = 0; n < cf.size() && n < cg.size(); ++n) total += cf[n] * cg[n] * norms_[n];
    return total;
  }

 private:
  std::vector<Poly> polys_;
  std::vector<T> norms_;
};

template <class T>
struct GramReport {
  int M = 0;
  std::vector<int> indices;              // -M..M
  std::vector<std::vector<T>> entries;   // entries[i][j] = <E_{indices[i]}, E_{indices[j]}>
  bool diagonal() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = 0; j < entries.size(); ++j)
        if (i != j && !is_zero(entries[i][j])) return false;
    return true;
  }
  bool positive_diagonal() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!(entries[i][i] > 0)) return false;
    return true;
  }
  const T& at(int m, int n) const { return entries.at(static_cast<std::size_t>(m + M)).at(static_cast<std::size_t>(n + M)); }
};

/// Gram matrix over indices -M..M of the vectors make(n) under form.
template <class T, class Make, class Form>
GramReport<T> gram_from(int M, Make make, Form form) {
  GramReport<T> g;
  g.M = M;
  std::vector<decltype(make(0))> vecs;
  for (int n = -M; n <= M; ++n) {
    g.indices.push_back(n);
    vecs.push_back(make(n));
  }
  const std::size_t k = vecs.size();
  g.entries.assign(k, std::vector<T>(k, T(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      T v = form(vecs[i], vecs[j]);
      g.entries[i][j] = v;
      g.entries[j][i] = v;
    }
  return g;
}

}  // namespace awvec
