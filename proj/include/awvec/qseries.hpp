#pragma once

// Pochhammer and q-Pochhammer symbols by their product definitions.

#include "awvec/laurent.hpp"

namespace awvec {

/// (a;q)_n = prod_{j<n} (1 - a q^j), n >= 0.
template <class T>
T q_pochhammer(const T& a, const T& q, int n) {
  T result(1);
  T term = a;
  for (int j = 0; j < n; ++j) {
    result *= T(1) - term;
    term *= q;
  }
  return result;
}

/// (a)_n = a (a+1) ... (a+n-1).
template <class T>
T rising(const T& a, int n) {
  T result(1);
  for (int j = 0; j < n; ++j) result *= a + T(j);
  return result;
}

template <class T>
T factorial(int n) {
  return rising(T(1), n);
}

/// (a z, a z^-1; q)_k as a symmetric Laurent polynomial.
template <class T>
LaurentPoly<T> az_pochhammer(const T& a, const T& q, int k) {
  LaurentPoly<T> result(T(1));
  T aq = a;
  for (int j = 0; j < k; ++j) {
    // (1 - aq^j z)(1 - aq^j z^-1) = (1 + a^2 q^{2j}) - aq^j (z + z^-1)
    LaurentPoly<T> factor(T(1) + aq * aq);
    factor -= LaurentPoly<T>::monomial(1, aq) + LaurentPoly<T>::monomial(-1, aq);
    result = result * factor;
    aq *= q;
  }
  return result;
}

}  // namespace awvec
