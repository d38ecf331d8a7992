#pragma once

#include <stdexcept>
#include <string>

namespace awvec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define AWVEC_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

AWVEC_DEFINE_ERROR(ZeroPoint)
AWVEC_DEFINE_ERROR(DivisionNotExact)
AWVEC_DEFINE_ERROR(DegenerateParameters)
AWVEC_DEFINE_ERROR(InvalidParameters)
AWVEC_DEFINE_ERROR(NotSymmetric)
AWVEC_DEFINE_ERROR(ParameterSingularity)
AWVEC_DEFINE_ERROR(InsufficientBasisDepth)
AWVEC_DEFINE_ERROR(NotAnEigenvector)
AWVEC_DEFINE_ERROR(IrrationalScaleFactor)
AWVEC_DEFINE_ERROR(PoleAtNegativeInteger)
AWVEC_DEFINE_ERROR(NumericalInstability)
AWVEC_DEFINE_ERROR(QuadratureNonConvergence)
AWVEC_DEFINE_ERROR(ConfigError)

#undef AWVEC_DEFINE_ERROR

}  // namespace awvec
