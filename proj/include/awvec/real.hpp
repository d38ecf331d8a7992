#pragma once

// Multiprecision float used by the limit sweeps where q^(1/2), q^(alpha+1/2)
// are irrational and denominators like (1 - q^(2n) abcd) approach zero.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "awvec/scalar.hpp"

namespace awvec {

using Real = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const Real& v) { return v.convert_to<double>(); }
inline long double to_long_double(const Real& v) { return v.convert_to<long double>(); }

}  // namespace awvec
