#pragma once

// Scalar types: exact rationals (GMP) plus the helpers every module shares.
// All algebra is templated on the scalar so the same code runs exactly over
// Rational and approximately over a multiprecision float for limit sweeps.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "awvec/errors.hpp"

namespace awvec {

using Rational = mpq_class;
using Integer = mpz_class;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
bool is_zero(const T& v) {
  return v == 0;
}

/// base^e for any integer e; e < 0 requires base != 0.
template <class T>
T ipow(const T& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw ZeroPoint("negative power of zero");
    T inv = T(1) / base;
    return ipow(inv, -e);
  }
  T result(1);
  T b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Strict rational parser: accepts "p" or "p/q" with optional sign on p.
/// Decimal or exponent notation is rejected so nothing is silently rounded.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&]() {
    return ConfigError("not an exact rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer zn(n, 10);
  Integer zd(std::string(den), 10);
  if (zd == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

/// Exact square root when both numerator and denominator are perfect squares.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
    return std::nullopt;
  Integer n = sqrt(r.get_num());
  Integer d = sqrt(r.get_den());
  Rational s(n, d);
  s.canonicalize();
  return s;
}

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double v) { return v; }
inline double to_double(long double v) { return static_cast<double>(v); }

inline long double to_long_double(const Rational& r) {
  // get_d loses nothing relevant for the magnitudes handled here, but going
  // through the quotient of the integer parts keeps extra bits when possible.
  if (mpz_sizeinbase(r.get_num_mpz_t(), 2) < 60 && mpz_sizeinbase(r.get_den_mpz_t(), 2) < 60)
    return static_cast<long double>(r.get_num().get_si()) / static_cast<long double>(r.get_den().get_si());
  return static_cast<long double>(r.get_d());
}
inline long double to_long_double(double v) { return v; }
inline long double to_long_double(long double v) { return v; }

/// Conversion of an exact parameter into the working scalar type.
template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(to_long_double(r));
  } else {
    return T(r.get_num().get_str()) / T(r.get_den().get_str());
  }
}

}  // namespace awvec
