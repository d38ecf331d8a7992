#pragma once

#include <random>
#include <string>

#include "awvec/askey_wilson.hpp"
#include "awvec/scalar.hpp"

namespace awvec::testing {

inline Rational R(const char* s) { return parse_rational(s); }
inline Rational R(int n) { return Rational(n); }

using LP = LaurentPoly<Rational>;
using SP = SymLaurentPoly<Rational>;
using OP = OrdinaryPoly<Rational>;

inline LP z(int k = 1, const Rational& c = Rational(1)) { return LP::monomial(k, c); }

inline AWParams<Rational> canonical_aw() { return AWParams<Rational>(R("1/2"), R("1/3"), R("-1/4"), R("1/5"), R("2/3")); }

/// Small-denominator nonzero rational in (-3/4, 3/4).
inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> den(2, 9);
  for (;;) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(-(3 * d - 1) / 4, (3 * d - 1) / 4);
    int n = num(rng);
    if (n == 0) continue;
    Rational r(n, d);
    r.canonicalize();
    if (r * 4 < 3 && r * 4 > -3) return r;
  }
}

inline LP random_laurent(std::mt19937& rng, int lo, int hi) {
  LP f;
  std::uniform_int_distribution<int> c(-5, 5);
  for (int k = lo; k <= hi; ++k) {
    Rational v(c(rng), 1 + (k & 3));
    v.canonicalize();
    f.set(k, v);
  }
  return f;
}

inline SP random_sym(std::mt19937& rng, int deg) {
  LP f = random_laurent(rng, 0, deg);
  return SP(f + f.reflect());
}

/// AW parameters satisfying the validity conditions for both (a,b,c,d) and (qa,qb,c,d).
inline AWParams<Rational> random_aw(std::mt19937& rng) {
  std::uniform_int_distribution<int> qd(2, 5);
  for (;;) {
    Rational q(1, qd(rng));
    try {
      AWParams<Rational> p(q, small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
      (void)p.shifted();
      return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace awvec::testing
